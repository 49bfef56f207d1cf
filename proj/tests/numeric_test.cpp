#include "pseudofield/numeric.hpp"

#include <gtest/gtest.h>

namespace pseudofield {
namespace {

TEST(Numeric, ExtGcdBezoutIdentity) {
  Int x, y;
  Int g = ext_gcd(Int(240), Int(46), x, y);
  EXPECT_EQ(g, 2);
  EXPECT_EQ(240 * x + 46 * y, g);
  g = ext_gcd(Int(-15), Int(35), x, y);
  EXPECT_EQ(g, 5);
  EXPECT_EQ(-15 * x + 35 * y, g);
}

TEST(Numeric, ModFloorAlwaysCanonical) {
  EXPECT_EQ(mod_floor(Int(7), Int(3)), 1);
  EXPECT_EQ(mod_floor(Int(-7), Int(3)), 2);
  EXPECT_EQ(mod_floor(Int(-3), Int(3)), 0);
}

TEST(Numeric, PowMod) {
  EXPECT_EQ(pow_mod(Int(2), Int(10), Int(1000)), 24);
  EXPECT_EQ(pow_mod(Int(5), Int(0), Int(7)), 1);
  EXPECT_EQ(pow_mod(Int(3), Int(100), Int(101)), 1);  // Fermat
}

TEST(Numeric, CeilLog2) {
  EXPECT_EQ(ceil_log2(Int(1)), 0u);
  EXPECT_EQ(ceil_log2(Int(2)), 1u);
  EXPECT_EQ(ceil_log2(Int(3)), 2u);
  EXPECT_EQ(ceil_log2(Int(4)), 2u);
  EXPECT_EQ(ceil_log2(Int(5)), 3u);
  EXPECT_EQ(ceil_log2(Int(1024)), 10u);
}

TEST(Numeric, IsPrime) {
  EXPECT_TRUE(is_prime(Int(2)));
  EXPECT_TRUE(is_prime(Int(997)));
  EXPECT_TRUE(is_prime(Int(1009)));
  EXPECT_FALSE(is_prime(Int(1)));
  EXPECT_FALSE(is_prime(Int(1001)));
  EXPECT_FALSE(is_prime(Int(0)));
}

TEST(Numeric, FactorIntegerRoundTrip) {
  auto fac = factor_integer(Int(360));
  Int prod = 1;
  for (const auto& [p, e] : fac) {
    EXPECT_TRUE(is_prime(p));
    prod *= pow_int(p, e);
  }
  EXPECT_EQ(prod, 360);
}

TEST(Numeric, Divisors) {
  std::vector<Int> d = divisors(Int(12));
  EXPECT_EQ(d.size(), 6u);
  for (const Int& v : d) EXPECT_EQ(Int(12) % v, 0);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), Rat(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rat(-7));
  EXPECT_EQ(parse_rational("10/4"), Rat(5, 2));
}

}  // namespace
}  // namespace pseudofield
