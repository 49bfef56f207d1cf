#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "pseudofield/hnf.hpp"
#include "pseudofield/homogeneous.hpp"
#include "pseudofield/int_poly.hpp"
#include "pseudofield/mod_poly.hpp"
#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct DegreeTooLow : std::domain_error {
  DegreeTooLow() : std::domain_error("degree below deg p + deg q - 1") {}
};
struct NotInCover : std::domain_error {
  NotInCover() : std::domain_error("polynomial is not in every cover ideal") {}
};
struct NoIntegerSolution : std::logic_error {
  NoIntegerSolution()
      : std::logic_error("no integer solution for a system the cover guarantees solvable") {}
};

namespace detail {

/// Remainder of f by a strictly monic divisor over Z/l^n.
inline ModPoly rem_by_monic(const ModPoly& f, const ModPoly& divisor) {
  if (!divisor.is_strictly_monic()) throw std::invalid_argument("divisor must be strictly monic");
  const Int& mod = f.modulus();
  std::vector<Int> rem(f.coeffs());
  std::size_t dd = static_cast<std::size_t>(divisor.degree());
  for (std::size_t i = rem.size(); i-- > dd;) {
    Int c = rem[i];
    if (c == 0) continue;
    rem[i] = 0;
    for (std::size_t j = 0; j < dd; ++j)
      rem[i - dd + j] = mod_floor(rem[i - dd + j] - c * divisor.coeff(j), mod);
  }
  return ModPoly(f.ell(), f.exponent(), std::move(rem));
}

/// Full extended Euclid over F_l: (monic gcd, u, v) with u*f + v*g = gcd.
inline std::tuple<ModPoly, ModPoly, ModPoly> ext_gcd_mod_ell(const ModPoly& f, const ModPoly& g) {
  const Int& ell = f.ell();
  ModPoly old_r = f, r = g;
  ModPoly old_u = ModPoly(ell, 1, {Int(1)}), u = ModPoly::zero(ell, 1);
  ModPoly old_v = ModPoly::zero(ell, 1), v = ModPoly(ell, 1, {Int(1)});
  while (!r.is_zero()) {
    auto [q, rem] = divmod_mod_ell(old_r, r);
    old_r = r;
    r = rem;
    ModPoly nu = old_u - q * u;
    old_u = u;
    u = nu;
    ModPoly nv = old_v - q * v;
    old_v = v;
    v = nv;
  }
  if (old_r.is_zero()) return {old_r, old_u, old_v};
  Int x, y;
  ext_gcd(old_r.coeffs().back(), ell, x, y);
  Int linv = mod_floor(x, ell);
  return {old_r * linv, old_u * linv, old_v * linv};
}

}  // namespace detail

/// One ideal <l^n, r> of the cover; r is a lift of s^multiplicity for an
/// irreducible s mod l. at_infinity descriptors constrain the x = 1
/// dehomogenization (the y^m factor at infinity), the rest the y = 1 one.
struct IdealDescriptor {
  Int ell;
  unsigned exponent;
  ModPoly r;
  ModPoly s;
  unsigned multiplicity;
  bool at_infinity;

  IntPoly side(const HomogeneousForm& h) const { return at_infinity ? h.at_x1() : h.at_y1(); }

  /// Membership in <l^exponent, r> through the descriptor's
  /// dehomogenization.
  bool contains(const HomogeneousForm& h) const {
    ModPoly reduced = ModPoly::from_int_poly(side(h), ell, exponent);
    return detail::rem_by_monic(reduced, r).is_zero();
  }
  /// Membership in the radical-side ideal <l, r>.
  bool contains_mod_ell(const HomogeneousForm& h) const {
    ModPoly reduced = ModPoly::from_int_poly(side(h), ell, 1);
    return detail::rem_by_monic(reduced, r.reduce_mod_ell().normalized()).is_zero();
  }
};

namespace detail {

/// Splits the strictly monic w into lifts of its irreducible-power
/// factors mod l via repeated coprime Hensel lifting.
inline std::vector<std::tuple<ModPoly, ModPoly, unsigned>> split_irreducible_powers(
    const ModPoly& w) {
  const Int& ell = w.ell();
  auto factors = factor_mod_l(w.lift(), ell);
  std::vector<std::tuple<ModPoly, ModPoly, unsigned>> out;
  ModPoly cur = w;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly head = ModPoly(ell, 1, {Int(1)});
    for (unsigned k = 0; k < factors[i].second; ++k) head = head * factors[i].first;
    ModPoly rest = ModPoly(ell, 1, {Int(1)});
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (unsigned k = 0; k < factors[j].second; ++k) rest = rest * factors[j].first;
    auto [r1, r2] = coprime_lift(cur, head, rest);
    out.emplace_back(r1, factors[i].first, factors[i].second);
    cur = r2;
  }
  if (!factors.empty()) out.emplace_back(cur, factors.back().first, factors.back().second);
  return out;
}

/// The cover pipeline on one dehomogenization side.
inline void cover_side(const IntPoly& pside, const IntPoly& qside, const Int& ell, unsigned e,
                       bool at_infinity, std::vector<IdealDescriptor>& out) {
  ModPoly pm = ModPoly::from_int_poly(pside, ell, 1);
  ModPoly qm = ModPoly::from_int_poly(qside, ell, 1);
  auto [g, a, b] = ext_gcd_mod_ell(pm, qm);
  if (g.degree() <= 0) return;  // trivial side ideal
  unsigned var_mult = 0;  // multiplicity of the variable in the gcd
  if (at_infinity) {
    while (static_cast<int>(var_mult) <= g.degree() && g.coeff(var_mult) == 0) ++var_mult;
    if (var_mult == 0) return;  // no factor at infinity
  }
  // u = a*p + b*q lifted to Z/l^e; congruent to the gcd mod l.
  ModPoly u = ModPoly::from_int_poly(pside, ell, e) * ModPoly(ell, e, a.coeffs()) +
              ModPoly::from_int_poly(qside, ell, e) * ModPoly(ell, e, b.coeffs());
  ModPoly v = monic_multiple(u);
  ModPoly w = ((ModPoly(ell, e, {Int(1)}) + v * ell) * u).normalized();
  if (w.degree() == 0) return;
  for (auto& [r, s, m] : split_irreducible_powers(w)) {
    if (at_infinity) {
      // Keep only the factor congruent to the variable power.
      if (!(s == ModPoly(ell, 1, {Int(0), Int(1)}))) continue;
      if (m != var_mult) throw std::logic_error("variable multiplicity mismatch at infinity");
    }
    out.push_back(IdealDescriptor{ell, e, r, s, m, at_infinity});
  }
}

}  // namespace detail

/// The finite ideal family covering <p, q>: a homogeneous form of
/// admissible degree lying in all of these ideals is an integer
/// combination a*p + b*q.
inline std::vector<IdealDescriptor> ideal_cover(const HomogeneousForm& p,
                                                const HomogeneousForm& q) {
  if (content(p) != 1 || content(q) != 1) throw NotPrimitive();
  Int res = resultant(p, q);
  if (res == 0) throw NotCoprime("zero resultant");
  std::vector<IdealDescriptor> cover;
  for (const auto& [ell, e] : factor_integer(res)) {
    detail::cover_side(p.at_y1(), q.at_y1(), ell, e, false, cover);
    detail::cover_side(p.at_x1(), q.at_x1(), ell, e, true, cover);
  }
  for (const IdealDescriptor& d : cover) {
    if (!d.contains_mod_ell(p) || !d.contains_mod_ell(q))
      throw std::logic_error("cover postcondition failed: p or q not in <l, r>");
  }
  return cover;
}

/// Exact homogeneous identity h = a*p + b*q over Z, via an integer
/// linear system; solvability is what the cover guarantees.
inline std::pair<HomogeneousForm, HomogeneousForm> express_in_ideal(
    const HomogeneousForm& h, const HomogeneousForm& p, const HomogeneousForm& q,
    const std::vector<IdealDescriptor>& cover) {
  if (h.degree() + 1 < p.degree() + q.degree()) throw DegreeTooLow();
  // Membership mod <l^n, r> is sufficient for solvability but not implied
  // by h in <p, q>; gate on the radical ideals <l, r> instead and let the
  // exact solve surface any deeper non-membership.
  for (const IdealDescriptor& d : cover)
    if (!d.contains_mod_ell(h)) throw NotInCover();
  unsigned da = h.degree() - p.degree();
  unsigned db = h.degree() - q.degree();
  std::size_t rows = h.degree() + 1;
  std::size_t cols = (da + 1) + (db + 1);
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols, Int(0)));
  for (unsigned i = 0; i <= h.degree(); ++i) {
    for (unsigned j = 0; j <= da; ++j)
      if (j <= i && i - j <= p.degree()) m[i][j] = p.coeff(i - j);
    for (unsigned j = 0; j <= db; ++j)
      if (j <= i && i - j <= q.degree()) m[i][da + 1 + j] = q.coeff(i - j);
  }
  std::vector<Int> rhs(rows);
  for (unsigned i = 0; i <= h.degree(); ++i) rhs[i] = h.coeff(i);
  auto sol = solve_integer_linear(std::move(m), rhs);
  if (!sol) throw NoIntegerSolution();
  std::vector<Int> ac(sol->begin(), sol->begin() + (da + 1));
  std::vector<Int> bc(sol->begin() + (da + 1), sol->end());
  HomogeneousForm a(da, std::move(ac));
  HomogeneousForm b(db, std::move(bc));
  if (!(a * p + b * q == h)) throw std::logic_error("express_in_ideal: identity check failed");
  return {a, b};
}

namespace detail {

/// Multiplicative order of the image of f in Z[t]/<l^n, r>; the image
/// must be a unit (nonzero in the residue field).
inline unsigned long unit_order(const IdealDescriptor& d, const HomogeneousForm& f) {
  ModPoly image = rem_by_monic(ModPoly::from_int_poly(d.side(f), d.ell, d.exponent), d.r);
  ModPoly one(d.ell, d.exponent, {Int(1)});
  unsigned long ring_size = 1;
  for (int i = 0; i < d.r.degree() * static_cast<int>(d.exponent); ++i)
    ring_size *= static_cast<unsigned long>(d.ell);
  ModPoly acc = image;
  for (unsigned long ord = 1; ord <= ring_size; ++ord) {
    if (acc == one) return ord;
    acc = rem_by_monic(acc * image, d.r);
  }
  throw std::logic_error("image is not a unit in the cover ring");
}

}  // namespace detail

/// Combines resultant-one partners of p and of q into one for p*q, by
/// powering both to map to 1 in every cover ring, expressing the
/// difference in <p, q> and subtracting the p-part.
inline HomogeneousForm res_one_combine(const HomogeneousForm& p, const HomogeneousForm& q,
                                       const HomogeneousForm& f, const HomogeneousForm& g) {
  Int rf = resultant(p, f);
  Int rg = resultant(q, g);
  if (abs_int(rf) != 1 || abs_int(rg) != 1)
    throw std::invalid_argument("inputs must have unit resultants with p and q");
  if (f.degree() == 0 || g.degree() == 0)
    throw std::invalid_argument("partners must be non-constant");
  std::vector<IdealDescriptor> cover = ideal_cover(p, q);
  unsigned long fu = 1, gu = 1;
  for (const IdealDescriptor& d : cover) {
    fu = std::lcm(fu, detail::unit_order(d, f));
    gu = std::lcm(gu, detail::unit_order(d, g));
  }
  unsigned long df = f.degree() * fu;
  unsigned long dg = g.degree() * gu;
  unsigned long target = std::lcm(df, dg);
  unsigned long floor_deg = p.degree() + q.degree() >= 1 ? p.degree() + q.degree() - 1 : 0;
  while (target < floor_deg) target += std::lcm(df, dg);
  HomogeneousForm fp = f.pow(static_cast<unsigned>(target / f.degree()));
  HomogeneousForm gp = g.pow(static_cast<unsigned>(target / g.degree()));
  HomogeneousForm h = fp;
  if (!(fp == gp)) {
    auto [a, b] = express_in_ideal(fp - gp, p, q, cover);
    h = fp - a * p;
    if (!(h == gp + b * q)) throw std::logic_error("res_one_combine: split mismatch");
  }
  Int check = resultant(p * q, h);
  if (abs_int(check) != 1) throw std::logic_error("res_one_combine: resultant check failed");
  return h;
}

}  // namespace pseudofield
