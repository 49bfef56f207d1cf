#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pseudofield/factorize.hpp"
#include "pseudofield/homogeneous.hpp"
#include "pseudofield/ideal_cover.hpp"
#include "pseudofield/int_poly.hpp"
#include "pseudofield/multi_poly.hpp"
#include "pseudofield/numeric.hpp"
#include "pseudofield/quad_field.hpp"
#include "pseudofield/sturm.hpp"

namespace pseudofield {

struct CycleSearchExhausted : std::runtime_error {
  CycleSearchExhausted() : std::runtime_error("power-residue cycle not found within the cap") {}
};
struct PrincipalityNotFound : std::runtime_error {
  PrincipalityNotFound()
      : std::runtime_error("no principal ideal power found within the search caps") {}
};
struct NotIrreducible : std::domain_error {
  NotIrreducible() : std::domain_error("polynomial is not irreducible over Q") {}
};
struct EndpointRoot : std::domain_error {
  EndpointRoot() : std::domain_error("could not nudge the interval endpoints off the roots") {}
};

/// An algebraic integer: monic square-free minimal polynomial plus a
/// rational interval isolating exactly one real root.
struct AlgebraicIntegerRep {
  IntPoly minpoly;
  RationalInterval interval;

  std::string to_json() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::string out = "{\"minpoly\": [";
    for (std::size_t i = 0; i < minpoly.coeffs().size(); ++i) {
      if (i) out += ", ";
      out += minpoly.coeff(i).str();
    }
    out += "], \"interval\": {\"lo\": \"" + numerator(interval.lo).str() + "/" +
           denominator(interval.lo).str() + "\", \"hi\": \"" + numerator(interval.hi).str() + "/" +
           denominator(interval.hi).str() + "\"}}";
    return out;
  }
};

namespace detail {

inline Int rat_floor(const Rat& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int num = numerator(v), den = denominator(v);
  return (num - mod_floor(num, den)) / den;
}

/// Residue of a rational with denominator coprime to k, modulo k.
inline Int rat_residue(const Rat& v, const Int& k) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (k == 1) return 0;
  Int x, y;
  Int g = ext_gcd(denominator(v), k, x, y);
  if (g != 1) throw std::logic_error("denominator shares a factor with the modulus");
  return mod_floor(numerator(v) * x, k);
}

/// Remainder of the integer polynomial a modulo a monic divisor.
inline IntPoly rem_by_monic_int(const IntPoly& a, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  std::vector<Int> rem(a.coeffs());
  std::size_t dd = static_cast<std::size_t>(divisor.degree());
  for (std::size_t i = rem.size(); i-- > dd;) {
    Int c = rem[i];
    if (c == 0) continue;
    rem[i] = 0;
    for (std::size_t j = 0; j < dd; ++j) rem[i - dd + j] -= c * divisor.coeff(j);
  }
  rem.resize(dd);
  return IntPoly(std::move(rem));
}

/// Re-embeds a polynomial into a space of total variables, its own
/// variables shifted by offset.
inline MultiPoly embed_vars(const MultiPoly& f, std::size_t total, std::size_t offset) {
  std::vector<MultiPoly> args;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    args.push_back(MultiPoly::variable(total, offset + i));
  return f.compose(args);
}

}  // namespace detail

/// Homogeneous integer form in nvars variables that vanishes on
/// F_{l^field_degree}^nvars only at the origin. Built from a root-free
/// binary form composed in a binary tree, surplus slots set to zero.
inline MultiPoly nonvanishing_form(const Int& ell, unsigned field_degree, std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("need at least one variable");
  if (field_degree == 0) throw std::invalid_argument("field degree must be positive");
  if (!is_prime(ell)) throw std::invalid_argument("l must be prime");
  MultiPoly cur = MultiPoly::variable(1, 0);
  if (nvars > 1) {
    // Smallest d >= 2 not dividing field_degree: a degree-d irreducible
    // over F_l then has no root in F_{l^field_degree}.
    unsigned d = 2;
    while (field_degree % d == 0) ++d;
    SmallGF ext(static_cast<unsigned long>(ell), d);
    MultiPoly f2(2);
    f2 = f2 + MultiPoly::variable(2, 0).pow(d);
    for (unsigned i = 0; i < d; ++i) {
      if (ext.modulus_low()[i] == 0) continue;
      MultiPoly term = MultiPoly::constant(2, Int(ext.modulus_low()[i]));
      term = term * MultiPoly::variable(2, 0).pow(i) * MultiPoly::variable(2, 1).pow(d - i);
      f2 = f2 + term;
    }
    while (cur.nvars() < nvars) {
      std::size_t half = cur.nvars();
      MultiPoly left = detail::embed_vars(cur, 2 * half, 0);
      MultiPoly right = detail::embed_vars(cur, 2 * half, half);
      cur = f2.compose({left, right});
    }
    if (cur.nvars() > nvars) {
      std::vector<MultiPoly> args;
      for (std::size_t i = 0; i < cur.nvars(); ++i)
        args.push_back(i < nvars ? MultiPoly::variable(nvars, i)
                                 : MultiPoly::constant(nvars, Int(0)));
      cur = cur.compose(args);
    }
  }
  if (!cur.is_homogeneous()) throw std::logic_error("nonvanishing_form: not homogeneous");
  // Exhaustive zero-set check when the point count is small.
  SmallGF gf(static_cast<unsigned long>(ell), field_degree);
  double points = 1;
  for (std::size_t i = 0; i < nvars; ++i) points *= static_cast<double>(gf.size());
  if (points <= 200000.0) {
    unsigned long total = 1;
    for (std::size_t i = 0; i < nvars; ++i) total *= gf.size();
    for (unsigned long idx = 0; idx < total; ++idx) {
      unsigned long t = idx;
      std::vector<SmallGF::Elem> point;
      bool origin = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        point.push_back(gf.from_index(t % gf.size()));
        if (!gf.is_zero(point.back())) origin = false;
        t /= gf.size();
      }
      bool zero = gf.is_zero(gf.eval(cur, point));
      if (zero != origin) throw std::logic_error("nonvanishing_form: zero-set check failed");
    }
  }
  return cur;
}

/// Homogeneous h with h(k, alpha) = 1, for alpha with the given monic
/// minimal polynomial and gcd(k, norm) = 1. Powers of 1/alpha are
/// tracked exactly; a pigeonhole cycle modulo k^(d-1) makes the
/// k-denominators divide out, and Bezout with k^m finishes.
inline HomogeneousForm unit_combination(const Int& k, const IntPoly& minpoly,
                                        unsigned long iter_cap = 1u << 20) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!minpoly.is_monic() || minpoly.degree() < 1)
    throw std::invalid_argument("minimal polynomial must be monic and non-constant");
  std::size_t d = static_cast<std::size_t>(minpoly.degree());
  Int c0 = minpoly.coeff(0);
  if (gcd_int(k, c0) != 1) throw NotCoprime("k shares a factor with the norm of alpha");
  Int cap_mod = pow_int(k, static_cast<unsigned long>(d - 1));
  // Minimal polynomial of 1/alpha is monic with q_i = c_{d-i}/c0; v^m
  // holds the coordinates of (1/alpha)^m in powers of 1/alpha, so
  // sum_i v_i alpha^(m-i) = 1 exactly.
  std::vector<Rat> q(d);
  for (std::size_t i = 0; i < d; ++i) q[i] = Rat(minpoly.coeff(d - i)) / Rat(c0);
  auto step = [&](const std::vector<Rat>& v) {
    std::vector<Rat> r(d);
    for (std::size_t i = 0; i < d; ++i) {
      r[i] = i >= 1 ? v[i - 1] : Rat(0);
      r[i] -= q[i] * v[d - 1];
    }
    return r;
  };
  auto residues = [&](const std::vector<Rat>& v) {
    std::vector<Int> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = detail::rat_residue(v[i], cap_mod);
    return r;
  };
  std::vector<Rat> v(d, Rat(0));
  v[0] = 1;
  std::vector<Int> start = residues(v);
  unsigned long period = 0;
  for (unsigned long m = 1; m <= iter_cap; ++m) {
    v = step(v);
    if (residues(v) == start) {
      period = m;
      break;
    }
  }
  if (period == 0) throw CycleSearchExhausted();
  unsigned long m = period;
  while (m < d) {
    for (unsigned long i = 0; i < period; ++i) v = step(v);
    m += period;
  }
  Int g = 1;
  for (const Rat& x : v) g = lcm_int(g, denominator(x));
  HomogeneousForm s = HomogeneousForm::zero(static_cast<unsigned>(m));
  Int kp = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rat scaled = v[i] * Rat(g);
    if (denominator(scaled) != 1) throw std::logic_error("denominator did not clear");
    Int num = numerator(scaled);
    if (num % kp != 0) throw std::logic_error("k-power does not divide the coefficient");
    s = s + HomogeneousForm::monomial(static_cast<unsigned>(m), static_cast<unsigned>(i),
                                      num / kp);
    kp *= k;
  }
  Int a, b;
  Int km = pow_int(k, m);
  if (ext_gcd(g, km, a, b) != 1) throw std::logic_error("g must be coprime to k");
  HomogeneousForm h =
      s * a + HomogeneousForm::monomial(static_cast<unsigned>(m), static_cast<unsigned>(m), b);
  // Symbolic check: h(k, x) reduces to 1 modulo the minimal polynomial.
  std::vector<Int> hk(static_cast<std::size_t>(m) + 1, Int(0));
  Int ki = 1;
  for (unsigned i = 0; i <= m; ++i) {
    hk[m - i] += h.coeff(i) * ki;
    ki *= k;
  }
  if (detail::rem_by_monic_int(IntPoly(std::move(hk)), minpoly) != IntPoly::constant(1))
    throw std::logic_error("unit_combination: h(k, alpha) != 1");
  return h;
}

inline HomogeneousForm unit_combination(const Int& k, const AlgebraicIntegerRep& alpha,
                                        unsigned long iter_cap = 1u << 20) {
  return unit_combination(k, alpha.minpoly, iter_cap);
}

/// A degree-n form whose value at the generators generates the n-th
/// power of their ideal.
struct IdealPowerResult {
  MultiPoly form;
  unsigned exponent;
  QuadElem generator;
};

namespace detail {

inline void monomials_of_degree(std::size_t nvars, unsigned total,
                                std::vector<std::vector<unsigned>>& out,
                                std::vector<unsigned>& cur, std::size_t pos) {
  if (pos + 1 == nvars) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned e = total; e + 1 > 0; --e) {
    cur[pos] = e;
    monomials_of_degree(nvars, total - e, out, cur, pos + 1);
  }
}

}  // namespace detail

/// Searches exponents n = 1, 2, ... and bounded-height integer
/// combinations of degree-n monomials in the generators for a value
/// generating the n-th ideal power; equality is certified by norm and
/// two-sided membership. The optional accept filter lets callers demand
/// extra properties of the found form.
inline IdealPowerResult ideal_power_generator(
    const QuadField& field, const std::vector<QuadElem>& gens, unsigned exponent_cap = 12,
    long height_cap = 3,
    const std::function<bool(const MultiPoly&, unsigned, const QuadElem&)>& accept = nullptr) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  bool all_zero = true;
  for (const QuadElem& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) throw std::invalid_argument("generators must not all be zero");
  QuadIdeal base(field, gens);
  for (unsigned n = 1; n <= exponent_cap; ++n) {
    QuadIdeal target = base.pow(n);
    Int tnorm = target.norm();
    std::vector<std::vector<unsigned>> monos;
    std::vector<unsigned> scratch(gens.size(), 0);
    detail::monomials_of_degree(gens.size(), n, monos, scratch, 0);
    std::vector<QuadElem> values;
    for (const auto& e : monos) {
      QuadElem v = field.from_int(1);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (unsigned t = 0; t < e[i]; ++t) v = field.mul(v, gens[i]);
      values.push_back(v);
    }
    // Coefficients tried in the order 0, 1, -1, 2, -2, ...; the height
    // shrinks if the joint space would be too large.
    long height = height_cap;
    while (height > 1) {
      double combos = 1;
      for (std::size_t i = 0; i < monos.size(); ++i) combos *= 2.0 * height + 1.0;
      if (combos <= 2000000.0) break;
      --height;
    }
    std::vector<Int> seq{Int(0)};
    for (long h = 1; h <= height; ++h) {
      seq.push_back(Int(h));
      seq.push_back(Int(-h));
    }
    std::vector<std::size_t> idx(monos.size(), 0);
    while (true) {
      QuadElem value{Rat(0), Rat(0)};
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (seq[idx[i]] == 0) continue;
        QuadElem scaled{values[i].a * Rat(seq[idx[i]]), values[i].b * Rat(seq[idx[i]])};
        value = field.add(value, scaled);
      }
      if (!value.is_zero()) {
        Rat nv = field.norm(value);
        if (denominator(nv) == 1 && abs_int(numerator(nv)) == tnorm && target.contains(value) &&
            field.is_integral(field.div(target.basis0(), value)) &&
            field.is_integral(field.div(target.basis1(), value))) {
          MultiPoly form(gens.size());
          for (std::size_t i = 0; i < monos.size(); ++i) {
            if (seq[idx[i]] == 0) continue;
            MultiPoly term = MultiPoly::constant(gens.size(), seq[idx[i]]);
            for (std::size_t j = 0; j < gens.size(); ++j)
              if (monos[i][j] > 0)
                term = term * MultiPoly::variable(gens.size(), j).pow(monos[i][j]);
            form = form + term;
          }
          if (!accept || accept(form, n, value)) return {form, n, value};
        }
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == seq.size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  throw PrincipalityNotFound();
}

/// Non-constant g with res(p, g) = +-1 for irreducible p of degree at
/// most 2. Degree 1 is Bezout on the coefficients; degree 2 goes
/// through a principal ideal power of (c, c*alpha).
inline IntPoly res_one_partner_irreducible(const IntPoly& p) {
  if (content(p) != 1) throw NotPrimitive();
  if (p.degree() < 1) throw std::invalid_argument("p must be non-constant");
  {
    IntFactorization fac = factor_int_poly(p);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1) throw NotIrreducible();
  }
  if (p.degree() == 1) {
    Int c0 = p.coeff(0), c1 = p.coeff(1);
    Int a, bneg;
    Int g0 = ext_gcd(c1, c0, a, bneg);
    if (abs_int(g0) != 1) throw std::logic_error("primitive linear must have gcd 1");
    if (g0 < 0) {
      a = -a;
      bneg = -bneg;
    }
    Int b = -bneg;  // res(c1 x + c0, b x + a) = a c1 - b c0 = 1
    if (b == 0) {
      // Shift along the solution family so g is non-constant.
      a += c0;
      b += c1;
    }
    IntPoly g({a, b});
    if (abs_int(sylvester_resultant(p, g)) != 1)
      throw std::logic_error("linear partner resultant check failed");
    return g;
  }
  if (p.degree() == 2) {
    Int c0 = p.coeff(0), c1 = p.coeff(1), c2 = p.coeff(2);
    Int disc = c1 * c1 - 4 * c0 * c2;
    Int dsf = squarefree_part(disc);
    Int f = boost::multiprecision::sqrt(abs_int(disc / dsf));
    if (f * f * dsf != disc) throw std::logic_error("discriminant decomposition failed");
    QuadField field(dsf);
    // c*alpha is integral: trace -c1, norm c0*c2.
    QuadElem calpha{Rat(-c1, 2), Rat(f, 2)};
    IntPoly out;
    auto accept = [&](const MultiPoly& form, unsigned, const QuadElem&) {
      std::vector<Int> gc;
      for (const auto& [e, c] : form.terms()) {
        if (gc.size() < e[1] + 1u) gc.resize(e[1] + 1u, Int(0));
        gc[e[1]] += c;
      }
      IntPoly g(gc);
      if (g.degree() < 1) return false;
      if (abs_int(sylvester_resultant(p, g)) != 1) return false;
      if (g.leading() < 0) g = -g;
      out = g;
      return true;
    };
    ideal_power_generator(field, {field.from_int(c2), calpha}, 12, 3, accept);
    if (abs_int(sylvester_resultant(p, out)) != 1)
      throw std::logic_error("quadratic partner resultant check failed");
    return out;
  }
  throw DegreeUnsupported("irreducible partner construction supports degree <= 2");
}

/// Monic non-constant q with res(p, q) = +-1: per-factor partners
/// folded together with y (partnered by x) joined in, which certifies
/// the leading coefficient.
inline IntPoly res_one_partner(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (content(p) != 1) throw NotPrimitive();
  if (p.degree() == 0) return IntPoly({Int(0), Int(1)});
  IntFactorization fac = factor_int_poly(p);
  HomogeneousForm cur_p(1, {Int(1), Int(0)});  // y
  HomogeneousForm cur_f(1, {Int(0), Int(1)});  // x, res(y, x) = -1
  for (const auto& [factor, mult] : fac.factors) {
    (void)mult;  // res multiplicativity keeps each factor's +-1
    IntPoly g = res_one_partner_irreducible(factor);
    HomogeneousForm pf =
        HomogeneousForm::homogenize(factor, static_cast<unsigned>(factor.degree()));
    HomogeneousForm gf = HomogeneousForm::homogenize(g, static_cast<unsigned>(g.degree()));
    cur_f = res_one_combine(cur_p, pf, cur_f, gf);
    cur_p = cur_p * pf;
  }
  IntPoly q = cur_f.at_y1();
  if (q.degree() != static_cast<int>(cur_f.degree()))
    throw std::logic_error("partner lost its certified leading term");
  if (q.leading() < 0) q = -q;
  if (!q.is_monic() || q.degree() < 1 || abs_int(sylvester_resultant(p, q)) != 1)
    throw std::logic_error("res_one_partner: postcondition failed");
  return q;
}

/// Monic q with res(p, q) = +-1 and a real root certified strictly
/// inside I. Powers the base partner past degree deg p + 2, then adds
/// an (m x - n) * p correction chosen by the endpoint sign case.
inline IntPoly res_one_in_interval(const IntPoly& p, const RationalInterval& interval,
                                   RationalInterval* certified = nullptr) {
  IntPoly q = res_one_partner(p);
  Rat a = interval.lo, b = interval.hi;
  // Nudge endpoints off roots of p and of the base partner.
  unsigned cap = 4 * static_cast<unsigned>(p.degree() + q.degree()) + 16;
  Rat step = (b - a) / Rat(4 * cap);
  unsigned used = 0;
  while (p.eval(a) == 0 || q.eval(a) == 0) {
    a += step;
    if (++used > cap) throw EndpointRoot();
  }
  used = 0;
  while (p.eval(b) == 0 || q.eval(b) == 0) {
    b -= step;
    if (++used > cap) throw EndpointRoot();
  }
  if (!(a < b)) throw EndpointRoot();
  if (sturm_root_count(q, a, b) >= 1) {
    if (certified) *certified = RationalInterval(a, b);
    return q;
  }
  unsigned target = static_cast<unsigned>(p.degree()) + 2;
  unsigned s = (target + static_cast<unsigned>(q.degree()) - 1) / static_cast<unsigned>(q.degree());
  q = q.pow(s);  // resultant becomes (+-1)^s
  Rat pa = p.eval(a), pb = p.eval(b);
  Rat qa = q.eval(a), qb = q.eval(b);
  IntPoly result;
  if ((pa > 0) != (pb > 0)) {
    // Opposite p signs: one large constant multiple of p flips one end.
    Rat bound = qa / pa;
    if (bound < 0) bound = -bound;
    Rat other = qb / pb;
    if (other < 0) other = -other;
    if (other > bound) bound = other;
    Int n = detail::rat_floor(bound) + 1;
    if (pa < 0) n = -n;
    result = q + p * n;
  } else {
    // Same p signs: (m x - n) * p with a slope making the shifted value
    // range wider than 1, so an integer n lands strictly inside.
    Rat spread = qa / pa - qb / pb;
    Int m = detail::rat_floor((spread + 1) / (b - a)) + 1;
    if (m < 1) m = 1;
    while (!(Rat(m) * (b - a) > spread + 1)) ++m;
    Rat lo = qa / pa + Rat(m) * a;
    Int n = detail::rat_floor(lo) + 1;
    result = q + p * IntPoly({-n, m});
  }
  Rat ra = result.eval(a), rb = result.eval(b);
  if (ra == 0 || rb == 0 || (ra > 0) == (rb > 0))
    throw std::logic_error("res_one_in_interval: endpoint sign certificate failed");
  if (!result.is_monic() || abs_int(sylvester_resultant(p, result)) != 1)
    throw std::logic_error("res_one_in_interval: postcondition failed");
  if (certified) *certified = RationalInterval(a, b);
  return result;
}

/// An algebraic integer alpha in I with every 1/p_i(alpha) an algebraic
/// integer, certified by res(minpoly, prod p_i) = +-1.
inline AlgebraicIntegerRep unit_value_alg_integer(const std::vector<IntPoly>& polys,
                                                 const RationalInterval& interval) {
  std::vector<IntPoly> active;
  for (const IntPoly& f : polys) {
    if (!f.is_monic()) throw std::invalid_argument("input polynomials must be monic");
    if (f.degree() >= 1) active.push_back(f);
  }
  if (active.empty()) {
    Int t = detail::rat_floor(interval.lo) + 1;
    if (Rat(t) < interval.hi)
      return {IntPoly({-t, Int(1)}), interval};
    // No integer inside: t + sqrt(c) with t pushed low enough that the
    // squared interval is longer than 1.
    t = detail::rat_floor(interval.lo);
    while (!((interval.hi - Rat(t)) * (interval.hi - Rat(t)) -
                 (interval.lo - Rat(t)) * (interval.lo - Rat(t)) >
             1))
      --t;
    Rat losq = (interval.lo - Rat(t)) * (interval.lo - Rat(t));
    Int c = detail::rat_floor(losq) + 1;
    IntPoly minpoly({t * t - c, -2 * t, Int(1)});
    if (sturm_root_count(minpoly, interval) != 1)
      throw std::logic_error("constructed quadratic does not isolate in I");
    return {minpoly, interval};
  }
  IntPoly product = IntPoly::constant(1);
  for (const IntPoly& f : active) product = product * f;
  RationalInterval certified = interval;
  IntPoly q = res_one_in_interval(product, interval, &certified);
  RationalInterval isolated = isolate_single_root(q, certified);
  IntFactorization fac = factor_int_poly(q);
  std::optional<IntPoly> minpoly;
  for (const auto& [factor, mult] : fac.factors) {
    (void)mult;
    if (sturm_root_count(factor, isolated) == 1) {
      minpoly = factor;
      break;
    }
  }
  if (!minpoly) throw std::logic_error("isolated root lost during factorization");
  if (!minpoly->is_monic()) throw std::logic_error("factor of a monic polynomial must be monic");
  if (gcd_poly(*minpoly, minpoly->derivative()).degree() > 0)
    throw std::logic_error("minimal polynomial is not square-free");
  if (abs_int(sylvester_resultant(*minpoly, product)) != 1)
    throw std::logic_error("unit_value_alg_integer: resultant certificate failed");
  return {*minpoly, isolated};
}

}  // namespace pseudofield
