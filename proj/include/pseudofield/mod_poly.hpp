#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pseudofield/int_poly.hpp"
#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct NotMonicModL : std::domain_error {
  NotMonicModL() : std::domain_error("leading coefficient is not a unit modulo l") {}
};
struct PreconditionViolated : std::domain_error {
  explicit PreconditionViolated(const std::string& clause)
      : std::domain_error("precondition violated: " + clause) {}
};

/// Polynomial over Z/l^n, ascending reduced coefficients, top zeros
/// (mod l^n) trimmed. Monic-ness is tracked relative to the mod-l
/// degree: "monic" here means the coefficient at the mod-l degree is a
/// unit and nothing sits above it.
class ModPoly {
 public:
  ModPoly(Int ell, unsigned exponent, std::vector<Int> coeffs)
      : ell_(std::move(ell)), exponent_(exponent), modulus_(pow_int(ell_, exponent_)) {
    if (exponent_ == 0) throw std::invalid_argument("exponent must be positive");
    c_ = std::move(coeffs);
    for (Int& v : c_) v = mod_floor(v, modulus_);
    trim();
  }
  static ModPoly zero(const Int& ell, unsigned exponent) { return ModPoly(ell, exponent, {}); }
  static ModPoly from_int_poly(const IntPoly& f, const Int& ell, unsigned exponent) {
    return ModPoly(ell, exponent, f.coeffs());
  }

  const Int& ell() const { return ell_; }
  unsigned exponent() const { return exponent_; }
  const Int& modulus() const { return modulus_; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Degree of the reduction mod l (may be below degree()).
  int mod_ell_degree() const {
    for (std::size_t i = c_.size(); i-- > 0;)
      if (c_[i] % ell_ != 0) return static_cast<int>(i);
    return -1;
  }
  /// Unit coefficient at the mod-l degree and nothing above it.
  bool is_monic() const { return !c_.empty() && c_.back() % ell_ != 0; }
  /// is_monic with leading coefficient exactly 1.
  bool is_strictly_monic() const { return is_monic() && c_.back() == 1; }

  IntPoly lift() const { return IntPoly(c_); }
  ModPoly reduce_mod_ell() const { return ModPoly(ell_, 1, c_); }
  ModPoly with_exponent(unsigned e) const { return ModPoly(ell_, e, c_); }

  ModPoly operator+(const ModPoly& o) const {
    check(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ModPoly(ell_, exponent_, std::move(r));
  }
  ModPoly operator-(const ModPoly& o) const {
    check(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ModPoly(ell_, exponent_, std::move(r));
  }
  ModPoly operator*(const ModPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero(ell_, exponent_);
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % modulus_;
    return ModPoly(ell_, exponent_, std::move(r));
  }
  ModPoly operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (Int& v : r) v *= s;
    return ModPoly(ell_, exponent_, std::move(r));
  }
  bool operator==(const ModPoly& o) const {
    return ell_ == o.ell_ && exponent_ == o.exponent_ && c_ == o.c_;
  }

  /// Multiplies by the inverse of the leading coefficient so the result
  /// is strictly monic.
  ModPoly normalized() const {
    if (!is_monic()) throw NotMonicModL();
    Int x, y;
    ext_gcd(c_.back(), modulus_, x, y);
    return *this * mod_floor(x, modulus_);
  }

 private:
  void check(const ModPoly& o) const {
    if (ell_ != o.ell_ || exponent_ != o.exponent_)
      throw std::invalid_argument("mixed moduli in ModPoly arithmetic");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Int ell_;
  unsigned exponent_;
  Int modulus_;
  std::vector<Int> c_;
};

namespace detail {

/// (quotient, remainder) of a by b over the field F_l; b nonzero.
inline std::pair<ModPoly, ModPoly> divmod_mod_ell(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  const Int& ell = a.ell();
  Int x, y;
  ext_gcd(b.coeffs().back(), ell, x, y);
  Int linv = mod_floor(x, ell);
  std::vector<Int> rem(a.coeffs());
  std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() < db + 1) return {ModPoly::zero(ell, 1), a};
  std::vector<Int> quot(rem.size() - db, Int(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    Int q = rem[i] * linv % ell;
    if (q == 0) continue;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = mod_floor(rem[i - db + j] - q * b.coeff(j), ell);
  }
  return {ModPoly(ell, 1, std::move(quot)), ModPoly(ell, 1, std::move(rem))};
}

}  // namespace detail

/// Monic gcd over F_l; gcd(f, 0) is the monic normalization of f.
inline ModPoly gcd_mod_l(const IntPoly& f, const IntPoly& g, const Int& ell) {
  ModPoly a = ModPoly::from_int_poly(f, ell, 1);
  ModPoly b = ModPoly::from_int_poly(g, ell, 1);
  while (!b.is_zero()) {
    ModPoly r = detail::divmod_mod_ell(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.normalized();
}

/// Bezout pair over F_l: u*r1 + v*r2 = 1. Requires gcd(r1, r2) = 1.
inline std::pair<ModPoly, ModPoly> bezout_mod_l(const ModPoly& r1, const ModPoly& r2) {
  const Int& ell = r1.ell();
  ModPoly old_r = r1, r = r2;
  ModPoly old_u = ModPoly(ell, 1, {Int(1)}), u = ModPoly::zero(ell, 1);
  ModPoly old_v = ModPoly::zero(ell, 1), v = ModPoly(ell, 1, {Int(1)});
  while (!r.is_zero()) {
    auto [q, rem] = detail::divmod_mod_ell(old_r, r);
    old_r = r;
    r = rem;
    ModPoly nu = old_u - q * u;
    old_u = u;
    u = nu;
    ModPoly nv = old_v - q * v;
    old_v = v;
    v = nv;
  }
  if (old_r.degree() != 0) throw NotCoprime("polynomials share a factor mod " + ell.str());
  Int x, y;
  ext_gcd(old_r.coeff(0), ell, x, y);
  Int ginv = mod_floor(x, ell);
  return {old_u * ginv, old_v * ginv};
}

/// Complete factorization of the monic part of f over F_l into monic
/// irreducibles with multiplicities, by trial division in ascending
/// (degree, lexicographic) candidate order; a minimal-degree divisor is
/// automatically irreducible.
inline std::vector<std::pair<ModPoly, unsigned>> factor_mod_l(const IntPoly& f, const Int& ell) {
  ModPoly rem = ModPoly::from_int_poly(f, ell, 1);
  if (rem.is_zero()) throw ZeroPolynomial();
  rem = rem.normalized();
  std::vector<std::pair<ModPoly, unsigned>> out;
  unsigned long l = static_cast<unsigned long>(ell);
  for (unsigned d = 1; static_cast<int>(d) <= rem.degree(); ++d) {
    if (rem.degree() < static_cast<int>(2 * d)) break;  // remainder would be irreducible
    // Monic degree-d candidates, low coefficients counting up in base l.
    std::vector<unsigned long> digits(d, 0);
    while (true) {
      std::vector<Int> c(d + 1);
      for (unsigned i = 0; i < d; ++i) c[i] = Int(digits[i]);
      c[d] = 1;
      ModPoly cand(ell, 1, std::move(c));
      unsigned mult = 0;
      while (rem.degree() >= cand.degree()) {
        auto [q, r] = detail::divmod_mod_ell(rem, cand);
        if (!r.is_zero()) break;
        rem = q;
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
      if (rem.degree() < static_cast<int>(2 * d)) break;
      unsigned pos = 0;
      while (pos < d && ++digits[pos] == l) {
        digits[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
    if (rem.degree() < static_cast<int>(2 * d)) break;
  }
  if (rem.degree() >= 1) out.emplace_back(rem, 1);
  return out;
}

/// v such that (1+l*v)*u is monic mod l^n, by peeling the coefficients
/// above the mod-l degree one l-power at a time.
inline ModPoly monic_multiple(const ModPoly& u) {
  if (!ModPoly(u.ell(), 1, u.coeffs()).is_monic()) throw NotMonicModL();
  const Int& ell = u.ell();
  unsigned n = u.exponent();
  ModPoly v = ModPoly::zero(ell, n);
  ModPoly one(ell, n, {Int(1)});
  ModPoly u_mod_ell = u.reduce_mod_ell();
  int d = u.mod_ell_degree();
  Int lk = ell;  // l^k
  for (unsigned k = 1; k < n; ++k, lk *= ell) {
    ModPoly w = (one + v * ell) * u;
    // High part: w = g + l^k * x^(d+1) * fpart with deg g <= d.
    std::vector<Int> fcoeffs;
    for (std::size_t j = d + 1; j <= static_cast<std::size_t>(w.degree()); ++j)
      fcoeffs.push_back(w.coeff(j) / lk % ell);
    ModPoly fpart(ell, 1, std::move(fcoeffs));
    if (fpart.is_zero()) continue;
    // x^(d+1) * fpart = a*u + b mod l with deg b < d; subtract l^k * a * u.
    std::vector<Int> shifted(static_cast<std::size_t>(d) + 1, Int(0));
    for (const Int& c : fpart.coeffs()) shifted.push_back(c);
    ModPoly a = detail::divmod_mod_ell(ModPoly(ell, 1, std::move(shifted)), u_mod_ell).first;
    v = v - ModPoly(ell, n, a.coeffs()) * (lk / ell);
  }
  ModPoly result = (one + v * ell) * u;
  if (!result.is_monic() || result.mod_ell_degree() != result.degree())
    throw std::logic_error("monic_multiple: postcondition failed");
  return v;
}

/// Hensel lift of the coprime factorization w = r1*r2 mod l to mod l^n.
inline std::pair<ModPoly, ModPoly> coprime_lift(const ModPoly& w, const ModPoly& r1,
                                                const ModPoly& r2) {
  const Int& ell = w.ell();
  unsigned n = w.exponent();
  if (!w.is_strictly_monic() || w.mod_ell_degree() != w.degree())
    throw PreconditionViolated("w must be monic mod l^n");
  if (!r1.is_strictly_monic() || !r2.is_strictly_monic())
    throw PreconditionViolated("r1 and r2 must be monic mod l");
  ModPoly w_mod_ell = w.reduce_mod_ell();
  if (!(r1 * r2 == w_mod_ell)) throw PreconditionViolated("w must equal r1*r2 mod l");
  ModPoly f(ell, 1, {}), g(ell, 1, {});
  {
    auto bez = bezout_mod_l(r1, r2);  // throws NotCoprime if shared factor
    f = bez.first;
    g = bez.second;
  }
  ModPoly r1p = r1.with_exponent(n);
  ModPoly r2p = r2.with_exponent(n);
  Int lk = ell;
  for (unsigned k = 1; k < n; ++k, lk *= ell) {
    ModPoly diff = w - r1p * r2p;
    if (diff.is_zero()) continue;
    std::vector<Int> ecoeffs;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(diff.degree()); ++j)
      ecoeffs.push_back(diff.coeff(j) / lk % ell);
    ModPoly e(ell, 1, std::move(ecoeffs));
    if (e.is_zero()) continue;
    // e = f'*r1 + g'*r2 with deg f' < deg r2, deg g' < deg r1.
    ModPoly fprime = detail::divmod_mod_ell(e * f, r2).second;
    ModPoly gprime = detail::divmod_mod_ell(e * g, r1).second;
    r1p = r1p + ModPoly(ell, n, gprime.coeffs()) * lk;
    r2p = r2p + ModPoly(ell, n, fprime.coeffs()) * lk;
  }
  if (!(r1p * r2p == w)) throw std::logic_error("coprime_lift: postcondition failed");
  return {r1p, r2p};
}

}  // namespace pseudofield
