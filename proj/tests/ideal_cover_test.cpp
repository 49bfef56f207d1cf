#include "pseudofield/ideal_cover.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

HomogeneousForm F(unsigned deg, std::vector<Int> c) { return HomogeneousForm(deg, std::move(c)); }

TEST(IdealCover, UnitResultantGivesEmptyCover) {
  // p = x, q = y: res = 1, nothing to cover.
  HomogeneousForm p = F(1, {Int(0), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(0)});
  EXPECT_TRUE(ideal_cover(p, q).empty());
}

TEST(IdealCover, LinearPairAtTwo) {
  // p = x - y, q = x + y: res = 2.
  HomogeneousForm p = F(1, {Int(-1), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(1)});
  std::vector<IdealDescriptor> cover = ideal_cover(p, q);
  ASSERT_FALSE(cover.empty());
  for (const IdealDescriptor& d : cover) {
    EXPECT_EQ(d.ell, 2);
    EXPECT_TRUE(d.contains_mod_ell(p));
    EXPECT_TRUE(d.contains_mod_ell(q));
  }
}

TEST(IdealCover, RejectsZeroResultant) {
  HomogeneousForm p = F(1, {Int(-1), Int(1)});
  EXPECT_THROW(ideal_cover(p, p), NotCoprime);
}

TEST(IdealCover, RejectsImprimitive) {
  HomogeneousForm p = F(1, {Int(-2), Int(2)});
  HomogeneousForm q = F(1, {Int(1), Int(1)});
  EXPECT_THROW(ideal_cover(p, q), NotPrimitive);
}

TEST(ExpressInIdeal, TrivialSplit) {
  HomogeneousForm p = F(1, {Int(0), Int(1)});  // x
  HomogeneousForm q = F(1, {Int(1), Int(0)});  // y
  HomogeneousForm h = F(1, {Int(1), Int(1)});  // x + y
  auto [a, b] = express_in_ideal(h, p, q, {});
  EXPECT_TRUE(a * p + b * q == h);
}

TEST(ExpressInIdeal, QuadraticInstance) {
  HomogeneousForm p = F(1, {Int(0), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(0)});
  HomogeneousForm h = F(2, {Int(0), Int(1), Int(3)});  // 3x^2 + xy
  auto [a, b] = express_in_ideal(h, p, q, {});
  EXPECT_TRUE(a * p + b * q == h);
}

TEST(ExpressInIdeal, DegreeGateEnforced) {
  HomogeneousForm p = F(2, {Int(1), Int(0), Int(1)});
  HomogeneousForm q = F(2, {Int(2), Int(1), Int(1)});
  HomogeneousForm h = F(2, {Int(1), Int(1), Int(1)});
  EXPECT_THROW(express_in_ideal(h, p, q, {}), DegreeTooLow);
}

TEST(ExpressInIdeal, MembershipGateEnforced) {
  HomogeneousForm p = F(1, {Int(-1), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(1)});
  std::vector<IdealDescriptor> cover = ideal_cover(p, q);
  ASSERT_FALSE(cover.empty());
  // x is not in <2, x+y> at y = 1.
  HomogeneousForm h = F(1, {Int(0), Int(1)});
  EXPECT_THROW(express_in_ideal(h, p, q, cover), NotInCover);
}

TEST(ExpressInIdeal, RoundTripRecoversIdentity) {
  HomogeneousForm p = F(2, {Int(-3), Int(7), Int(2)});
  HomogeneousForm q = F(2, {Int(-9), Int(-2), Int(6)});
  std::vector<IdealDescriptor> cover = ideal_cover(p, q);
  HomogeneousForm a = F(2, {Int(1), Int(-2), Int(4)});
  HomogeneousForm b = F(2, {Int(5), Int(0), Int(-1)});
  HomogeneousForm h = a * p + b * q;
  auto [ra, rb] = express_in_ideal(h, p, q, cover);
  EXPECT_TRUE(ra * p + rb * q == h);
}

TEST(ResOneCombine, LinearPair) {
  // Partners with res = +-1: res(x-y, x) = 1 and res(x+y, x) = -1.
  HomogeneousForm p = F(1, {Int(-1), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(1)});
  HomogeneousForm f = F(1, {Int(0), Int(1)});
  HomogeneousForm h = res_one_combine(p, q, f, f);
  EXPECT_EQ(abs_int(resultant(p * q, h)), 1);
}

TEST(ResOneCombine, RejectsBadPartner) {
  HomogeneousForm p = F(1, {Int(-1), Int(1)});
  HomogeneousForm q = F(1, {Int(1), Int(1)});
  EXPECT_THROW(res_one_combine(p, q, q, q), std::invalid_argument);
}

}  // namespace
}  // namespace pseudofield
