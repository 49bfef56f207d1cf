#include "pseudofield/rcf_probe.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

TEST(RcfProbe, LowComplexitySetGrowsWithThreshold) {
  PrimeField f{Int(199)};
  auto s1 = detail::low_complexity_set(f, 1, 2);
  auto s2 = detail::low_complexity_set(f, 2, 2);
  EXPECT_LE(s1.size(), s2.size());
  for (const Int& x : s1) {
    bool found = false;
    for (const Int& y : s2) found = found || x == y;
    EXPECT_TRUE(found) << x;
  }
}

TEST(RcfProbe, Phi2FailsAtP3WithCounterexample) {
  std::vector<Int> cx;
  EXPECT_FALSE(phi2_check(PrimeField(Int(3)), 2, 2, &cx));
  ASSERT_EQ(cx.size(), 2u);
  EXPECT_EQ(cx[0], 1);
  EXPECT_EQ(cx[1], 1);  // 1 + 1 = 2 is not a square mod 3
}

TEST(RcfProbe, MaxThresholdAtP3) {
  ThresholdReport r = max_threshold(PrimeField(Int(3)), 2, 2);
  ASSERT_TRUE(r.max_satisfying.has_value());
  EXPECT_EQ(*r.max_satisfying, 1u);
  ASSERT_FALSE(r.rows.empty());
  EXPECT_FALSE(r.rows.back().second);
}

TEST(RcfProbe, ThresholdRowsDownwardClosed) {
  for (long p : {3, 7, 11, 19, 23, 31}) {
    for (unsigned d : {2u, 3u}) {
      ThresholdReport r = max_threshold(PrimeField(Int(p)), d, d == 2 ? 2 : 1);
      bool seen_false = false;
      for (const auto& [b, holds] : r.rows) {
        (void)b;
        if (!holds) seen_false = true;
        else
          EXPECT_FALSE(seen_false) << "closure violated at p=" << p << " d=" << d;
      }
    }
  }
}

TEST(RcfProbe, PhiDValidatesArguments) {
  PrimeField f{Int(7)};
  EXPECT_THROW(phi_d_check(f, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(phi_d_check(f, 1, 2, 1, /*complex_case=*/false), std::invalid_argument);
  EXPECT_NO_THROW(phi_d_check(f, 1, 2, 1, /*complex_case=*/true));
}

TEST(RcfProbe, EnumerationRefusal) {
  // |S|^d past the ceiling must refuse rather than run forever.
  PrimeField f{Int(1009)};
  EXPECT_THROW(phi_d_check(f, 3, 5, 3), EnumerationTooLarge);
}

TEST(RcfProbe, PsiLevelsOccupied) {
  PrimeField f{Int(199)};
  EXPECT_FALSE(psi_check(f, 0, 4));
  EXPECT_TRUE(psi_check(f, 1, 4));
  EXPECT_TRUE(psi_check(f, 2, 4));
  EXPECT_THROW(psi_check(f, 5, 4), std::invalid_argument);
}

TEST(RcfProbe, GuardedTransitivity) {
  for (long p : {7, 11, 19, 23, 31, 43, 47}) {
    bool guard = false;
    EXPECT_TRUE(guarded_transitivity_check(PrimeField(Int(p)), 2, 2, &guard)) << p;
    // Guard is the Pythagorean closure; for B=2 it holds iff 2 is a square.
    PrimeField f{Int(p)};
    EXPECT_EQ(guard, is_square(Residue(2, f))) << p;
  }
  EXPECT_THROW(guarded_transitivity_check(PrimeField(Int(13)), 2, 2), BadModulus);
}

}  // namespace
}  // namespace pseudofield
