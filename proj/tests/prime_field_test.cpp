#include "pseudofield/prime_field.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(Int(1)), BadModulus);
  EXPECT_THROW(PrimeField(Int(2)), BadModulus);
  EXPECT_THROW(PrimeField(Int(9)), BadModulus);
  EXPECT_THROW(PrimeField(Int(-7)), BadModulus);
  EXPECT_NO_THROW(PrimeField(Int(3)));
  EXPECT_NO_THROW(PrimeField(Int(1009)));
}

TEST(PrimeField, ResidueArithmetic) {
  PrimeField f{Int(13)};
  Residue a(7, f), b(9, f);
  EXPECT_EQ((a + b).value(), 3);
  EXPECT_EQ((a - b).value(), 11);
  EXPECT_EQ((a * b).value(), 11);
  EXPECT_EQ((-a).value(), 6);
  EXPECT_EQ(Residue(-1, f).value(), 12);
}

TEST(PrimeField, FieldMismatchDetected) {
  PrimeField f{Int(13)}, g{Int(17)};
  EXPECT_THROW(Residue(1, f) + Residue(1, g), FieldMismatch);
}

TEST(PrimeField, InverseIsExact) {
  PrimeField f{Int(101)};
  for (long v = 1; v < 101; ++v) {
    Residue a(v, f);
    EXPECT_EQ((a * inv(a)).value(), 1);
  }
  EXPECT_THROW(inv(Residue(0, f)), ZeroInverse);
}

TEST(PrimeField, SquareCountIsHalf) {
  PrimeField f{Int(19)};
  long squares = 0;
  for (long v = 1; v < 19; ++v)
    if (is_square(Residue(v, f))) ++squares;
  EXPECT_EQ(squares, 9);
  EXPECT_TRUE(is_square(Residue(0, f)));
}

TEST(PrimeField, SqrtFor3Mod4) {
  PrimeField f{Int(23)};
  for (long v = 0; v < 23; ++v) {
    Residue a(v, f);
    if (!is_square(a)) {
      EXPECT_THROW(sqrt_3mod4(a), NotResidue);
      continue;
    }
    Residue r = sqrt_3mod4(a);
    EXPECT_EQ(r * r, a);
    EXPECT_LE(r.value() * 2, Int(23));  // canonical root
  }
  PrimeField g{Int(13)};
  EXPECT_THROW(sqrt_3mod4(Residue(1, g)), BadModulus);
}

TEST(PrimeField, OrderRelationReflexive) {
  PrimeField f{Int(7)};
  for (long v = 0; v < 7; ++v) EXPECT_TRUE(order_le(Residue(v, f), Residue(v, f)));
}

TEST(PrimeField, OrderTotalFor3Mod4) {
  // For p = 3 (mod 4), -1 is not a square, so exactly one of b-a, a-b is.
  PrimeField f{Int(19)};
  for (long a = 0; a < 19; ++a)
    for (long b = 0; b < 19; ++b) {
      bool ab = order_le(Residue(a, f), Residue(b, f));
      bool ba = order_le(Residue(b, f), Residue(a, f));
      EXPECT_TRUE(ab || ba);
      if (a != b) EXPECT_FALSE(ab && ba);
    }
}

}  // namespace
}  // namespace pseudofield
