#include "pseudofield/algebraic_recon.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

Residue res(long v, long p) { return Residue(Int(v), PrimeField(Int(p))); }

TEST(AlgebraicRecon, KnownValueInF199) {
  auto r = f_qbar_oracle(res(10, 199), 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->cost, 3u);
  EXPECT_TRUE(verify_witness(r->witness));
  EXPECT_FALSE(f_qbar_oracle(res(10, 199), 2).has_value());
}

TEST(AlgebraicRecon, SmallResiduesAreCheap) {
  // 1 and -1 are eigenvalues of the 1x1 matrix (±1), cost 1.
  auto one = f_qbar_oracle(res(1, 199), 3);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->cost, 1u);
  auto minus = f_qbar_oracle(res(198, 199), 3);
  ASSERT_TRUE(minus.has_value());
  EXPECT_EQ(minus->cost, 1u);
}

TEST(AlgebraicRecon, BudgetCeilingRefused) {
  EXPECT_THROW(f_qbar_oracle(res(10, 199), 7), BudgetTooLarge);
}

TEST(AlgebraicRecon, CostFormula) {
  PrimeField f{Int(13)};
  IntMatrix m(2);
  m.at(0, 0) = 3;
  AlgebraicWitness w{m, Int(2), Int(3), Residue(5, f)};
  EXPECT_EQ(w.cost(), 2u + 2u);  // n=2, ceil_log2(3)=2
}

TEST(AlgebraicRecon, VerifyRejectsUnderdeclaredBound) {
  auto r = f_qbar_oracle(res(10, 199), 4);
  ASSERT_TRUE(r.has_value());
  AlgebraicWitness w = r->witness;
  w.entry_bound = 0;
  if (w.matrix.entry_bound() > 0) EXPECT_FALSE(verify_witness(w));
}

TEST(AlgebraicRecon, ProductSumNegInverse) {
  auto wa = f_qbar_oracle(res(10, 199), 4);
  auto wb = f_qbar_oracle(res(57, 199), 4);
  ASSERT_TRUE(wa && wb);
  AlgebraicWitness prod = witness_product(wa->witness, wb->witness);
  EXPECT_TRUE(verify_witness(prod));
  EXPECT_EQ(prod.target.value(), (Int(10) * 57) % 199);
  EXPECT_LE(prod.cost(), wa->cost * wb->cost);

  AlgebraicWitness sum = witness_sum(wa->witness, wb->witness);
  EXPECT_TRUE(verify_witness(sum));
  EXPECT_EQ(sum.target.value(), 67);
  EXPECT_LE(sum.cost(), wa->cost * wb->cost + 1);

  AlgebraicWitness neg = witness_neg(wa->witness);
  EXPECT_TRUE(verify_witness(neg));
  EXPECT_EQ(neg.cost(), wa->cost);

  AlgebraicWitness inverse = witness_inverse(wa->witness);
  EXPECT_TRUE(verify_witness(inverse));
  EXPECT_LE(inverse.cost(), 2 * wa->cost * wa->cost + wa->cost);
}

TEST(AlgebraicRecon, InverseOfZeroRejected) {
  auto w = f_qbar_oracle(res(0, 13), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_THROW(witness_inverse(w->witness), ZeroTarget);
}

TEST(AlgebraicRecon, PolyRootWitness) {
  // x^2 - 2 has root 6 mod 17 (36 = 2 + 2*17).
  PrimeField f{Int(17)};
  auto c0 = f_qbar_oracle(Residue(-2, f), 4);
  auto c1 = f_qbar_oracle(Residue(0, f), 4);
  ASSERT_TRUE(c0 && c1);
  AlgebraicWitness w = witness_poly_root({c0->witness, c1->witness}, Residue(6, f));
  EXPECT_TRUE(verify_witness(w));
  unsigned bound = 2 * c0->cost * c1->cost;
  EXPECT_LE(w.cost(), bound);
  EXPECT_THROW(witness_poly_root({c0->witness, c1->witness}, Residue(5, f)), NotARoot);
}

TEST(AlgebraicRecon, RestrictedVariantNeverBeatsUnrestricted) {
  VariantSpec restricted;
  restricted.entries = Restriction::kExactlyOne;
  for (long v : {2, 5, 10, 57}) {
    auto full = f_qbar_oracle(res(v, 199), 4);
    auto lim = f_variant_oracle(res(v, 199), 4, restricted);
    if (lim) {
      ASSERT_TRUE(full.has_value());
      EXPECT_LE(full->cost, lim->cost);
      EXPECT_LE(lim->witness.entry_bound, 1);
    }
  }
}

TEST(AlgebraicRecon, WitnessJsonShape) {
  auto r = f_qbar_oracle(res(10, 199), 4);
  ASSERT_TRUE(r.has_value());
  std::string j = r->witness.to_json();
  EXPECT_NE(j.find("\"p\": \"199\""), std::string::npos);
  EXPECT_NE(j.find("\"cost\": 3"), std::string::npos);
}

}  // namespace
}  // namespace pseudofield
