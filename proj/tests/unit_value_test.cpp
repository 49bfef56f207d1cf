#include "pseudofield/unit_value.hpp"

#include <gtest/gtest.h>

#include "pseudofield/factorize.hpp"

namespace pseudofield {
namespace {

IntPoly P(std::vector<Int> c) { return IntPoly(std::move(c)); }

// h(k, x) as a univariate polynomial: the first variable carries k, the
// second the algebraic number.
IntPoly substitute_k(const HomogeneousForm& h, const Int& k) {
  unsigned m = h.degree();
  std::vector<Int> out(m + 1, Int(0));
  Int ki = 1;
  for (unsigned i = 0; i <= m; ++i) {
    out[m - i] += h.coeff(i) * ki;
    ki *= k;
  }
  return IntPoly(std::move(out));
}

IntPoly rem_monic(IntPoly f, const IntPoly& divisor) {
  while (f.degree() >= divisor.degree()) {
    Int c = f.coeff(f.degree());
    std::vector<Int> shift(static_cast<std::size_t>(f.degree() - divisor.degree()), Int(0));
    shift.push_back(c);
    f = f - divisor * IntPoly(std::move(shift));
  }
  return f;
}

TEST(UnitCombination, SqrtThreeAtTwo) {
  HomogeneousForm h = unit_combination(Int(2), P({-3, 0, 1}));
  EXPECT_EQ(rem_monic(substitute_k(h, Int(2)), P({-3, 0, 1})), IntPoly::constant(1));
}

TEST(UnitCombination, SqrtTwoAtThree) {
  IntPoly mp = P({-2, 0, 1});
  HomogeneousForm h = unit_combination(Int(3), mp);
  EXPECT_EQ(rem_monic(substitute_k(h, Int(3)), mp), IntPoly::constant(1));
}

TEST(UnitCombination, IntegerAlpha) {
  IntPoly mp = P({-3, 1});  // alpha = 3
  HomogeneousForm h = unit_combination(Int(2), mp);
  // Direct numeric check: h(2, 3) = 1.
  Int value = 0;
  for (unsigned i = 0; i <= h.degree(); ++i)
    value += h.coeff(i) * pow_int(Int(2), i) * pow_int(Int(3), h.degree() - i);
  EXPECT_EQ(value, 1);
}

TEST(UnitCombination, CoprimalityRequired) {
  EXPECT_THROW(unit_combination(Int(3), P({-3, 1})), NotCoprime);
  EXPECT_THROW(unit_combination(Int(1), P({-3, 1})), std::invalid_argument);
  EXPECT_THROW(unit_combination(Int(2), P({-3, 2})), std::invalid_argument);  // not monic
}

TEST(NonvanishingForm, BinaryQuadratic) {
  // Over F_2 a field extension of degree 2 gives the norm form
  // x^2 + xy + y^2, nonzero away from the origin.
  MultiPoly f = nonvanishing_form(Int(2), 1, 2);
  unsigned deg = 0;
  EXPECT_TRUE(f.is_homogeneous(&deg));
  EXPECT_GE(deg, 2u);
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y) {
      if (x == 0 && y == 0) continue;
      EXPECT_NE(mod_floor(f.eval({Int(x), Int(y)}), Int(2)), 0);
    }
}

TEST(NonvanishingForm, TernaryOverF3) {
  MultiPoly f = nonvanishing_form(Int(3), 1, 3);
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      for (long z = 0; z < 3; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        EXPECT_NE(mod_floor(f.eval({Int(x), Int(y), Int(z)}), Int(3)), 0);
      }
}

TEST(IdealPowerGenerator, NonPrincipalIdealSquares) {
  QuadField field(Int(-5));
  std::vector<QuadElem> gens{field.from_int(2), QuadElem{Rat(1), Rat(1)}};
  IdealPowerResult r = ideal_power_generator(field, gens);
  EXPECT_EQ(r.exponent, 2u);
  QuadIdeal base(field, gens);
  QuadIdeal squared = base.pow(r.exponent);
  QuadIdeal principal(field, {r.generator});
  EXPECT_TRUE(squared == principal);
}

TEST(IdealPowerGenerator, PrincipalIdealIsImmediate) {
  QuadField field(Int(-1));
  IdealPowerResult r = ideal_power_generator(field, {field.from_int(3)});
  EXPECT_EQ(r.exponent, 1u);
  EXPECT_TRUE(QuadIdeal(field, {field.from_int(3)}) == QuadIdeal(field, {r.generator}));
}

TEST(ResOnePartner, IrreducibleExamples) {
  for (const IntPoly& p : {P({0, 1}), P({-5, 1}), P({1, 0, 1}), P({-2, 0, 1})}) {
    IntPoly g = res_one_partner_irreducible(p);
    EXPECT_GE(g.degree(), 1);
    EXPECT_EQ(abs_int(sylvester_resultant(p, g)), 1) << "p degree " << p.degree();
  }
}

TEST(ResOnePartner, CubicUnsupported) {
  EXPECT_THROW(res_one_partner_irreducible(P({-2, 0, 0, 1})), DegreeUnsupported);
}

TEST(ResOnePartner, ReducibleInput) {
  IntPoly p = P({-1, 0, 1}) * P({2, 0, 1});  // (x^2-1)(x^2+2)
  IntPoly g = res_one_partner(p);
  EXPECT_EQ(abs_int(sylvester_resultant(p, g)), 1);
}

TEST(ResOneInInterval, SignCertifiedRoot) {
  IntPoly p = P({1, 0, 1});
  RationalInterval iv(Rat(1), Rat(2));
  RationalInterval certified = iv;
  IntPoly q = res_one_in_interval(p, iv, &certified);
  EXPECT_TRUE(q.is_monic());
  EXPECT_EQ(abs_int(sylvester_resultant(p, q)), 1);
  EXPECT_EQ(sturm_root_count(q, certified), 1u);
  EXPECT_LE(iv.lo, certified.lo);
  EXPECT_LE(certified.hi, iv.hi);
}

TEST(UnitValueAlgInteger, EmptyListIntegerCase) {
  AlgebraicIntegerRep alpha = unit_value_alg_integer({}, RationalInterval(Rat(3), Rat(5)));
  EXPECT_EQ(sturm_root_count(alpha.minpoly, alpha.interval), 1u);
  EXPECT_EQ(alpha.minpoly, P({-4, 1}));
}

TEST(UnitValueAlgInteger, EmptyListNarrowInterval) {
  AlgebraicIntegerRep alpha = unit_value_alg_integer({}, RationalInterval(Rat(3), Rat(4)));
  EXPECT_TRUE(alpha.minpoly.is_monic());
  EXPECT_EQ(sturm_root_count(alpha.minpoly, RationalInterval(Rat(3), Rat(4))), 1u);
}

TEST(UnitValueAlgInteger, UnitReciprocal) {
  std::vector<IntPoly> polys{P({0, 1})};  // alpha itself must be a unit
  AlgebraicIntegerRep alpha = unit_value_alg_integer(polys, RationalInterval(Rat(1), Rat(2)));
  EXPECT_TRUE(alpha.minpoly.is_monic());
  EXPECT_EQ(abs_int(alpha.minpoly.coeff(0)), 1);  // unit norm: 1/alpha integral
  EXPECT_EQ(sturm_root_count(alpha.minpoly, alpha.interval), 1u);
  IntFactorization fac = factor_int_poly(alpha.minpoly);
  EXPECT_EQ(fac.factors.size(), 1u);  // irreducible
}

TEST(UnitValueAlgInteger, RequiresMonicInputs) {
  EXPECT_THROW(unit_value_alg_integer({P({1, 2})}, RationalInterval(Rat(1), Rat(2))),
               std::invalid_argument);
}

TEST(UnitValueAlgInteger, JsonShape) {
  AlgebraicIntegerRep alpha = unit_value_alg_integer({}, RationalInterval(Rat(3), Rat(5)));
  std::string j = alpha.to_json();
  EXPECT_NE(j.find("\"minpoly\""), std::string::npos);
  EXPECT_NE(j.find("\"interval\""), std::string::npos);
}

}  // namespace
}  // namespace pseudofield
