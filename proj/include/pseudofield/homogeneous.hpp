#pragma once

#include <string>
#include <vector>

#include "pseudofield/int_poly.hpp"
#include "pseudofield/numeric.hpp"

namespace pseudofield {

/// Homogeneous bivariate integer form of fixed degree d; coeffs[i]
/// multiplies x^i y^(d-i). Unlike IntPoly the coefficient vector keeps
/// its full length d+1 so the degree is part of the value.
class HomogeneousForm {
 public:
  HomogeneousForm(unsigned degree, std::vector<Int> coeffs)
      : d_(degree), c_(std::move(coeffs)) {
    if (c_.size() != d_ + 1) throw std::invalid_argument("coefficient count must be degree+1");
  }
  static HomogeneousForm zero(unsigned degree) {
    return HomogeneousForm(degree, std::vector<Int>(degree + 1, Int(0)));
  }
  /// x^i y^(d-i) with coefficient c.
  static HomogeneousForm monomial(unsigned degree, unsigned i, const Int& c) {
    HomogeneousForm f = zero(degree);
    f.c_[i] = c;
    return f;
  }
  /// Homogenization of f to degree d >= deg f: coefficient of x^i is
  /// padded with y powers.
  static HomogeneousForm homogenize(const IntPoly& f, unsigned degree) {
    if (f.degree() > static_cast<int>(degree))
      throw std::invalid_argument("homogenization degree below polynomial degree");
    std::vector<Int> c(degree + 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i] = f.coeff(i);
    return HomogeneousForm(degree, std::move(c));
  }

  unsigned degree() const { return d_; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(unsigned i) const { return i <= d_ ? c_[i] : Int(0); }
  bool is_zero() const {
    for (const Int& v : c_)
      if (v != 0) return false;
    return true;
  }

  /// Dehomogenization at y = 1: the ascending coefficients carry over.
  IntPoly at_y1() const { return IntPoly(c_); }
  /// Dehomogenization at x = 1: a polynomial in y, coefficient of y^j
  /// is coeffs[d-j].
  IntPoly at_x1() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
  }

  Int eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (unsigned i = 0; i <= d_; ++i) {
      if (c_[i] == 0) continue;
      acc += c_[i] * pow_int(x, i) * pow_int(y, d_ - i);
    }
    return acc;
  }

  HomogeneousForm operator+(const HomogeneousForm& o) const {
    if (d_ != o.d_) throw std::invalid_argument("degree mismatch in homogeneous sum");
    std::vector<Int> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return HomogeneousForm(d_, std::move(r));
  }
  HomogeneousForm operator-(const HomogeneousForm& o) const { return *this + (-o); }
  HomogeneousForm operator-() const {
    std::vector<Int> r(c_);
    for (Int& v : r) v = -v;
    return HomogeneousForm(d_, std::move(r));
  }
  HomogeneousForm operator*(const HomogeneousForm& o) const {
    std::vector<Int> r(d_ + o.d_ + 1, Int(0));
    for (unsigned i = 0; i <= d_; ++i) {
      if (c_[i] == 0) continue;
      for (unsigned j = 0; j <= o.d_; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return HomogeneousForm(d_ + o.d_, std::move(r));
  }
  HomogeneousForm operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (Int& v : r) v *= s;
    return HomogeneousForm(d_, std::move(r));
  }
  bool operator==(const HomogeneousForm& o) const { return d_ == o.d_ && c_ == o.c_; }

  HomogeneousForm pow(unsigned e) const {
    HomogeneousForm r(0, {Int(1)});
    HomogeneousForm b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// "deg=d:c0,c1,...,cd"
  std::string str() const {
    std::string out = "deg=" + std::to_string(d_) + ":";
    for (unsigned i = 0; i <= d_; ++i) {
      if (i) out += ",";
      out += c_[i].str();
    }
    return out;
  }
  static HomogeneousForm parse(const std::string& s) {
    if (s.rfind("deg=", 0) != 0) throw std::invalid_argument("homogeneous form needs deg= prefix");
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("missing : in homogeneous form");
    unsigned d = static_cast<unsigned>(std::stoul(s.substr(4, colon - 4)));
    IntPoly body = IntPoly::parse(s.substr(colon + 1));
    std::vector<Int> c(d + 1, Int(0));
    for (unsigned i = 0; i <= d; ++i) c[i] = body.coeff(i);
    return HomogeneousForm(d, std::move(c));
  }

 private:
  unsigned d_;
  std::vector<Int> c_;
};

/// Resultant of two homogeneous forms: the Sylvester determinant on the
/// full coefficient vectors (degrees are part of the value, so leading
/// zeros count).
inline Int resultant(const HomogeneousForm& p, const HomogeneousForm& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
  std::size_t dp = p.degree(), dq = q.degree();
  std::size_t n = dp + dq;
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t row = 0; row < dq; ++row)
    for (std::size_t i = 0; i <= dp; ++i) m[row][row + i] = p.coeff(static_cast<unsigned>(dp - i));
  for (std::size_t row = 0; row < dp; ++row)
    for (std::size_t i = 0; i <= dq; ++i)
      m[dq + row][row + i] = q.coeff(static_cast<unsigned>(dq - i));
  return detail::det_bareiss(std::move(m));
}

inline Int content(const HomogeneousForm& f) {
  Int g = 0;
  for (const Int& c : f.coeffs()) g = gcd_int(g, c);
  return g;
}

}  // namespace pseudofield
