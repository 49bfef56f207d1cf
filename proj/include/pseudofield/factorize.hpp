#pragma once

#include <utility>
#include <vector>

#include "pseudofield/int_poly.hpp"
#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct FactorizationUnsupported : std::domain_error {
  explicit FactorizationUnsupported(const std::string& what) : std::domain_error(what) {}
};

/// A factorization over Z: f = sign * content * prod factor_i^mult_i,
/// with primitive irreducible factors of positive leading coefficient.
struct IntFactorization {
  int sign = 1;
  Int content_part = 1;
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly product() const {
    IntPoly r = IntPoly::constant(Int(sign) * content_part);
    for (const auto& [f, m] : factors) r = r * f.pow(m);
    return r;
  }
};

namespace detail {

/// Pseudo-remainder (degree strictly drops; result is a rational
/// multiple of a mod b, which is all gcd needs).
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  Int lead = b.leading();
  std::size_t db = static_cast<std::size_t>(b.degree());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t dr = static_cast<std::size_t>(rem.degree());
    IntPoly shift = IntPoly::monomial(dr - db, rem.leading());
    rem = rem * lead - shift * b;
  }
  return rem;
}

/// Irreducibility is certified structurally by the search below; this
/// strips all rational-root linear factors (q*x - p in lowest terms).
inline void strip_rational_roots(IntPoly& g, std::vector<IntPoly>& out) {
  while (g.degree() >= 1) {
    bool found = false;
    std::vector<Int> ps = divisors(g.coeff(0) == 0 ? Int(1) : g.coeff(0));
    std::vector<Int> qs = divisors(g.leading());
    if (g.coeff(0) == 0) {
      IntPoly lin({Int(0), Int(1)});
      auto quot = divide_exact(g, lin);
      out.push_back(lin);
      g = *quot;
      continue;
    }
    for (const Int& pnum : ps) {
      for (const Int& qden : qs) {
        if (gcd_int(pnum, qden) != 1) continue;
        for (int s : {1, -1}) {
          IntPoly lin({Int(-s) * pnum, qden});
          if (auto quot = divide_exact(g, lin)) {
            out.push_back(lin);
            g = *quot;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return;
  }
}

/// Kronecker interpolation search for a factor of degree k of the
/// rational-root-free g; returns a proper factor or nullopt.
inline std::optional<IntPoly> kronecker_factor(const IntPoly& g, unsigned k,
                                               unsigned long combo_cap) {
  std::vector<Int> points;
  for (Int t = 0; points.size() < k + 1; t = t <= 0 ? Int(1 - t) : Int(-t))
    points.push_back(t);
  std::vector<std::vector<Int>> divisor_sets;
  unsigned long combos = 1;
  for (const Int& x : points) {
    Int v = g.eval(x);
    if (v == 0) return std::nullopt;  // rational roots were already stripped
    std::vector<Int> ds;
    for (const Int& d : divisors(v)) {
      ds.push_back(d);
      ds.push_back(-d);
    }
    if (combos > combo_cap / ds.size())
      throw FactorizationUnsupported("divisor search space exceeds the cap");
    combos *= static_cast<unsigned long>(ds.size());
    divisor_sets.push_back(std::move(ds));
  }
  std::vector<std::size_t> idx(points.size(), 0);
  while (true) {
    // Lagrange interpolation through (points[i], divisor choice).
    std::vector<Rat> coeffs(k + 1, Rat(0));
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<Rat> basis{Rat(1)};
      Rat denom = 1;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t] -= basis[t] * Rat(points[j]);
          next[t + 1] += basis[t];
        }
        basis = std::move(next);
        denom *= Rat(points[i] - points[j]);
      }
      Rat scale = Rat(divisor_sets[i][idx[i]]) / denom;
      for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * scale;
    }
    bool integral = true;
    std::vector<Int> ic(k + 1);
    for (std::size_t t = 0; t <= k; ++t) {
      if (boost::multiprecision::denominator(coeffs[t]) != 1) {
        integral = false;
        break;
      }
      ic[t] = boost::multiprecision::numerator(coeffs[t]);
    }
    if (integral) {
      IntPoly cand(ic);
      if (cand.degree() == static_cast<int>(k)) {
        cand = primitive_part(cand);
        if (cand.leading() < 0) cand = -cand;
        if (cand.degree() >= 1 && divides(cand, g)) return cand;
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == divisor_sets[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) return std::nullopt;
  }
}

}  // namespace detail

/// Primitive gcd over Z[x] via a primitive pseudo-remainder sequence.
inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = detail::pseudo_rem(a, b);
    a = b;
    b = primitive_part(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

/// Factorization into irreducibles over Z, scoped to small degrees:
/// rational roots always; beyond that a bounded Kronecker divisor
/// search up to degree 6. Throws FactorizationUnsupported past scope.
inline IntFactorization factor_int_poly(const IntPoly& f,
                                        unsigned long combo_cap = 2000000) {
  if (f.is_zero()) throw ZeroPolynomial();
  IntFactorization out;
  IntPoly g = f;
  if (g.leading() < 0) {
    out.sign = -1;
    g = -g;
  }
  out.content_part = content(g);
  g = primitive_part(g);
  if (g.degree() > 6)
    throw FactorizationUnsupported("degree " + std::to_string(g.degree()) +
                                   " exceeds the factorizer scope (6)");
  std::vector<IntPoly> irreducibles;
  std::vector<IntPoly> stack{g};
  while (!stack.empty()) {
    IntPoly cur = stack.back();
    stack.pop_back();
    if (cur.degree() <= 0) continue;
    std::vector<IntPoly> linears;
    detail::strip_rational_roots(cur, linears);
    for (IntPoly& l : linears) {
      if (l.leading() < 0) l = -l;
      irreducibles.push_back(std::move(l));
    }
    if (cur.degree() <= 0) continue;
    if (cur.degree() <= 3) {
      // No rational root and degree <= 3 means irreducible over Q.
      irreducibles.push_back(cur);
      continue;
    }
    bool split = false;
    for (unsigned k = 2; k <= static_cast<unsigned>(cur.degree()) / 2; ++k) {
      if (auto factor = detail::kronecker_factor(cur, k, combo_cap)) {
        auto quot = divide_exact(cur, *factor);
        if (!quot) throw std::logic_error("factor_int_poly: verified factor must divide");
        stack.push_back(*factor);
        stack.push_back(*quot);
        split = true;
        break;
      }
    }
    if (!split) irreducibles.push_back(cur);
  }
  // Collect multiplicities.
  for (IntPoly& p : irreducibles) {
    bool merged = false;
    for (auto& [q, m] : out.factors)
      if (q == p) {
        ++m;
        merged = true;
        break;
      }
    if (!merged) out.factors.emplace_back(std::move(p), 1);
  }
  return out;
}

}  // namespace pseudofield
