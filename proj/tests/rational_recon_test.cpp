#include "pseudofield/rational_recon.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

TEST(RationalRecon, KnownValuesInF13) {
  PrimeField f{Int(13)};
  FqResult r = f_q_fast(Residue(7, f));
  EXPECT_EQ(r.value, 2u);
  EXPECT_EQ(r.witness.str(), "+1/2");

  EXPECT_EQ(f_q_fast(Residue(0, f)).value, 1u);
  EXPECT_EQ(f_q_fast(Residue(1, f)).value, 1u);
  EXPECT_EQ(f_q_fast(Residue(12, f)).value, 1u);  // -1
  EXPECT_EQ(f_q_fast(Residue(2, f)).value, 2u);
}

TEST(RationalRecon, WitnessMatches) {
  PrimeField f{Int(13)};
  Residue x(7, f);
  FqResult r = f_q_fast(x);
  EXPECT_TRUE(witness_matches(r.witness, x));
  RationalWitness wrong{Int(1), Int(3), false};
  EXPECT_FALSE(witness_matches(wrong, x));
}

TEST(RationalRecon, FastMatchesOracleEverywhere) {
  for (long p : {3, 5, 7, 11, 13, 17, 199, 211}) {
    PrimeField f{Int(p)};
    for (long v = 0; v < p; ++v) {
      FqResult fast = f_q_fast(Residue(v, f));
      FqResult slow = f_q_oracle(Residue(v, f));
      EXPECT_EQ(fast.value, slow.value) << "p=" << p << " x=" << v;
      EXPECT_EQ(fast.witness, slow.witness) << "p=" << p << " x=" << v;
    }
  }
}

TEST(RationalRecon, NegationSymmetry) {
  PrimeField f{Int(199)};
  for (long v = 1; v < 199; ++v)
    EXPECT_EQ(f_q_fast(Residue(v, f)).value, f_q_fast(Residue(-v, f)).value);
}

TEST(RationalRecon, GrowthBoundsHold) {
  for (long p : {3, 7, 13, 31, 101, 199}) {
    BoundReport report = check_fq_bounds(PrimeField(Int(p)));
    EXPECT_TRUE(report.violations.empty()) << "p=" << p;
  }
}

TEST(RationalRecon, ValueNeverExceedsSqrtBound) {
  // Every residue has a witness with max(n, m) <= p - 1, and the minimal
  // one is found, so values stay within [1, p-1].
  PrimeField f{Int(101)};
  for (long v = 0; v < 101; ++v) {
    Int val = f_q_fast(Residue(v, f)).value;
    EXPECT_GE(val, 1);
    EXPECT_LT(val, 101);
  }
}

}  // namespace
}  // namespace pseudofield
