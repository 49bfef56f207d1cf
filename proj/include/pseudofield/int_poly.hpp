#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};
struct NotPrimitive : std::domain_error {
  NotPrimitive() : std::domain_error("polynomial content must be 1") {}
};
struct NotCoprime : std::domain_error {
  explicit NotCoprime(const std::string& what) : std::domain_error(what) {}
};

/// Univariate integer polynomial, ascending coefficients, top zeros
/// trimmed. The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(const Int& v) { return IntPoly({v}); }
  static IntPoly monomial(std::size_t deg, const Int& coeff) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = coeff;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& leading() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
  IntPoly operator-() const {
    std::vector<Int> r(c_);
    for (Int& v : r) v = -v;
    return IntPoly(std::move(r));
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }
  IntPoly operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (Int& v : r) v *= s;
    return IntPoly(std::move(r));
  }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly pow(unsigned e) const {
    IntPoly r = constant(1);
    IntPoly b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(r));
  }

  /// Comma-separated ascending coefficients, "0" for zero.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += c_[i].str();
    }
    return out;
  }
  static IntPoly parse(const std::string& s) {
    std::vector<Int> c;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
      if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial: " + s);
      c.emplace_back(tok);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return IntPoly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// gcd of coefficients; 0 for the zero polynomial.
inline Int content(const IntPoly& f) {
  Int g = 0;
  for (const Int& c : f.coeffs()) g = gcd_int(g, c);
  return g;
}

inline IntPoly primitive_part(const IntPoly& f) {
  Int c = content(f);
  if (c == 0 || c == 1) return f;
  std::vector<Int> r(f.coeffs());
  for (Int& v : r) v /= c;
  return IntPoly(std::move(r));
}

namespace detail {

/// Exact determinant by Bareiss fraction-free elimination.
inline Int det_bareiss(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

/// Resultant as the exact determinant of the Sylvester matrix of the
/// descending coefficient rows, fraction-free. res of two constants is 1.
inline Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  std::size_t df = static_cast<std::size_t>(f.degree());
  std::size_t dg = static_cast<std::size_t>(g.degree());
  std::size_t n = df + dg;
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t row = 0; row < dg; ++row)
    for (std::size_t i = 0; i <= df; ++i) m[row][row + i] = f.coeff(df - i);
  for (std::size_t row = 0; row < df; ++row)
    for (std::size_t i = 0; i <= dg; ++i) m[dg + row][row + i] = g.coeff(dg - i);
  return detail::det_bareiss(std::move(m));
}

/// Quotient of f by g over the rationals when the division is exact;
/// the quotient is returned only if it has integer coefficients.
inline std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw ZeroPolynomial();
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Rat> rem(f.coeffs().size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(f.coeff(i));
  std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Rat> quot(rem.size() - dg, Rat(0));
  Rat lead(g.leading());
  for (std::size_t i = rem.size(); i-- > dg;) {
    Rat q = rem[i] / lead;
    if (q == 0) continue;
    quot[i - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= q * Rat(g.coeff(j));
  }
  for (const Rat& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<Int> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (boost::multiprecision::denominator(quot[i]) != 1) return std::nullopt;
    out[i] = boost::multiprecision::numerator(quot[i]);
  }
  return IntPoly(std::move(out));
}

inline bool divides(const IntPoly& g, const IntPoly& f) {
  return divide_exact(f, g).has_value();
}

/// Verified implication: for coprime primitive p, q, if both divide f
/// then so does their product.
inline bool coprime_divisibility_check(const IntPoly& p, const IntPoly& q, const IntPoly& f) {
  if (content(p) != 1 || content(q) != 1) throw NotPrimitive();
  if (sylvester_resultant(p, q) == 0) throw NotCoprime("p and q share a root");
  if (!(divides(p, f) && divides(q, f))) return true;  // vacuous
  return divides(p * q, f);
}

}  // namespace pseudofield
