#include <gtest/gtest.h>

#include "pseudofield/factorize.hpp"
#include "pseudofield/homogeneous.hpp"
#include "pseudofield/int_poly.hpp"
#include "pseudofield/mod_poly.hpp"
#include "pseudofield/sturm.hpp"

namespace pseudofield {
namespace {

IntPoly P(std::vector<Int> c) { return IntPoly(std::move(c)); }

TEST(IntPoly, ArithmeticAndTrim) {
  IntPoly f = P({1, 1});   // x + 1
  IntPoly g = P({-1, 1});  // x - 1
  EXPECT_EQ(f * g, P({-1, 0, 1}));
  EXPECT_EQ(f + g, P({0, 2}));
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(content(P({6, -9, 3})), 3);
  EXPECT_EQ(primitive_part(P({6, -9, 3})), P({2, -3, 1}));
}

TEST(IntPoly, SylvesterResultantKnownValues) {
  EXPECT_EQ(sylvester_resultant(P({1, 0, 1}), P({0, 1})), 1);     // res(x^2+1, x)
  EXPECT_EQ(sylvester_resultant(P({-5, 1}), P({-4, 1})), 1);      // res(x-5, x-4) = 5-4
  EXPECT_EQ(sylvester_resultant(P({-2, 0, 1}), P({-3, 0, 1})), 1);
  EXPECT_EQ(sylvester_resultant(P({0, 1}), P({0, 1})), 0);
}

TEST(IntPoly, ResultantMultiplicative) {
  IntPoly f = P({2, -1, 3}), g = P({-1, 4}), h = P({5, 1, 1});
  EXPECT_EQ(sylvester_resultant(f * g, h),
            sylvester_resultant(f, h) * sylvester_resultant(g, h));
}

TEST(IntPoly, DivideExact) {
  IntPoly f = P({-1, 0, 1});
  auto q = divide_exact(f, P({1, 1}));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P({-1, 1}));
  EXPECT_FALSE(divide_exact(f, P({2, 1})).has_value());
  EXPECT_TRUE(divides(P({1, 1}), f));
}

TEST(Factorize, QuadraticSplits) {
  IntFactorization fac = factor_int_poly(P({-1, 0, 1}));
  EXPECT_EQ(fac.sign, 1);
  EXPECT_EQ(fac.content_part, 1);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.product(), P({-1, 0, 1}));
}

TEST(Factorize, IrreducibleStaysWhole) {
  IntFactorization fac = factor_int_poly(P({1, 0, 1}));
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].first, P({1, 0, 1}));
  EXPECT_EQ(fac.factors[0].second, 1u);
}

TEST(Factorize, RepeatedFactorMultiplicity) {
  IntPoly sq = P({1, 1}) * P({1, 1}) * P({-3, 1});
  IntFactorization fac = factor_int_poly(sq);
  unsigned total = 0;
  for (const auto& [p, m] : fac.factors) total += m * static_cast<unsigned>(p.degree());
  EXPECT_EQ(total, 3u);
}

TEST(Factorize, DegreeCapRefused) {
  std::vector<Int> c(9, Int(1));  // degree 8
  EXPECT_THROW(factor_int_poly(IntPoly(std::move(c))), FactorizationUnsupported);
}

TEST(Sturm, RootCounts) {
  IntPoly f = P({-2, 0, 1});  // x^2 - 2
  EXPECT_EQ(sturm_root_count(f, Rat(1), Rat(2)), 1u);
  EXPECT_EQ(sturm_root_count(f, Rat(-2), Rat(2)), 2u);
  EXPECT_EQ(sturm_root_count(f, Rat(2), Rat(3)), 0u);
  RationalInterval iv = isolate_single_root(f, RationalInterval(Rat(-2), Rat(2)));
  EXPECT_EQ(sturm_root_count(f, iv), 1u);
}

TEST(ModPoly, MonicMultipleLowersDegree) {
  // 3x^2 + x + 1 mod 9 times the unit 1+3(2x+1) collapses to x + 4.
  ModPoly u(Int(3), 2, {Int(1), Int(1), Int(3)});
  ModPoly v = monic_multiple(u);
  ModPoly w = (ModPoly(Int(3), 2, {Int(1)}) + v * Int(3)) * u;
  EXPECT_TRUE(w.is_monic());
  EXPECT_EQ(w.mod_ell_degree(), w.degree());
  EXPECT_EQ(w.degree(), 1);
}

TEST(ModPoly, MonicMultipleRequiresUnitSomewhere) {
  EXPECT_THROW(monic_multiple(ModPoly(Int(3), 2, {Int(3), Int(3), Int(3)})), NotMonicModL);
}

TEST(ModPoly, CoprimeLiftRoundTrip) {
  ModPoly r1(Int(5), 1, {Int(1), Int(1)});
  ModPoly r2(Int(5), 1, {Int(2), Int(1)});
  ModPoly w = r1.with_exponent(3) * r2.with_exponent(3) +
              ModPoly(Int(5), 3, {Int(10), Int(25)});
  auto [l1, l2] = coprime_lift(w, r1, r2);
  EXPECT_TRUE(l1 * l2 == w);
  EXPECT_TRUE(l1.reduce_mod_ell() == r1);
  EXPECT_TRUE(l2.reduce_mod_ell() == r2);
}

TEST(ModPoly, CoprimeLiftRejectsSharedFactor) {
  ModPoly r(Int(5), 1, {Int(1), Int(1)});
  ModPoly w = r.with_exponent(2) * r.with_exponent(2);
  EXPECT_THROW(coprime_lift(w, r, r), NotCoprime);
}

TEST(Homogeneous, DehomogenizationAndResultant) {
  // p = x - y, q = x + y: res = 2.
  HomogeneousForm p(1, {Int(-1), Int(1)});
  HomogeneousForm q(1, {Int(1), Int(1)});
  EXPECT_EQ(resultant(p, q), 2);
  EXPECT_EQ(p.at_y1(), P({-1, 1}));
  EXPECT_EQ(p.at_x1(), P({1, -1}));
  HomogeneousForm prod = p * q;
  EXPECT_EQ(prod.degree(), 2u);
  EXPECT_EQ(prod.at_y1(), P({-1, 0, 1}));
}

TEST(Homogeneous, ResultantOfPowersIsPower) {
  HomogeneousForm p(1, {Int(-1), Int(1)});
  HomogeneousForm q(1, {Int(1), Int(1)});
  EXPECT_EQ(resultant(p.pow(2), q), 4);
  EXPECT_EQ(resultant(p, q.pow(3)), 8);
}

}  // namespace
}  // namespace pseudofield
