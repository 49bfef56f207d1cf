#pragma once

#include <array>
#include <vector>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct DegreeUnsupported : std::domain_error {
  explicit DegreeUnsupported(const std::string& what) : std::domain_error(what) {}
};

/// Largest square divisor removed: n = squarefree_part(n) * square.
inline Int squarefree_part(Int n) {
  if (n == 0) return 0;
  Int sign = n < 0 ? -1 : 1;
  n = abs_int(n);
  Int out = 1;
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2 == 1) out *= p;
  return sign * out;
}

/// Element a + b*sqrt(D) of the quadratic field Q(sqrt(D)), D squarefree.
struct QuadElem {
  Rat a;
  Rat b;

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

/// Q(sqrt(D)) with its ring of integers Z[omega], omega = (1+sqrt(D))/2
/// when D = 1 (mod 4), else sqrt(D).
class QuadField {
 public:
  explicit QuadField(Int d) : d_(std::move(d)) {
    if (d_ == 0 || d_ == 1 || squarefree_part(d_) != d_)
      throw std::invalid_argument("field discriminant base must be squarefree and != 0, 1");
  }

  const Int& d() const { return d_; }
  bool half_integral_basis() const { return mod_floor(d_, 4) == 1; }

  QuadElem add(const QuadElem& x, const QuadElem& y) const { return {x.a + y.a, x.b + y.b}; }
  QuadElem sub(const QuadElem& x, const QuadElem& y) const { return {x.a - y.a, x.b - y.b}; }
  QuadElem neg(const QuadElem& x) const { return {-x.a, -x.b}; }
  QuadElem mul(const QuadElem& x, const QuadElem& y) const {
    return {x.a * y.a + x.b * y.b * Rat(d_), x.a * y.b + x.b * y.a};
  }
  QuadElem conj(const QuadElem& x) const { return {x.a, -x.b}; }
  Rat norm(const QuadElem& x) const { return x.a * x.a - Rat(d_) * x.b * x.b; }
  Rat trace(const QuadElem& x) const { return x.a * 2; }
  QuadElem div(const QuadElem& x, const QuadElem& y) const {
    Rat n = norm(y);
    if (n == 0) throw std::domain_error("division by zero field element");
    QuadElem t = mul(x, conj(y));
    return {t.a / n, t.b / n};
  }
  QuadElem from_int(const Int& n) const { return {Rat(n), Rat(0)}; }
  QuadElem omega() const {
    return half_integral_basis() ? QuadElem{Rat(1, 2), Rat(1, 2)} : QuadElem{Rat(0), Rat(1)};
  }

  /// z is in the ring of integers iff trace and norm are integers.
  bool is_integral(const QuadElem& x) const {
    using boost::multiprecision::denominator;
    return denominator(trace(x)) == 1 && denominator(norm(x)) == 1;
  }

  /// Coordinates (u, v) with x = u + v*omega, if they are integers.
  std::optional<std::array<Int, 2>> coords(const QuadElem& x) const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Rat v = half_integral_basis() ? x.b * 2 : x.b;
    Rat u = half_integral_basis() ? x.a - x.b : x.a;
    if (denominator(u) != 1 || denominator(v) != 1) return std::nullopt;
    return std::array<Int, 2>{numerator(u), numerator(v)};
  }
  QuadElem from_coords(const Int& u, const Int& v) const {
    QuadElem w = omega();
    return {Rat(u) + w.a * Rat(v), w.b * Rat(v)};
  }

 private:
  Int d_;
};

/// Nonzero integral ideal of O_K as a Z-module in the {1, omega} basis,
/// stored as an upper-triangular Hermite basis [[a, b], [0, c]]:
/// generated by a + b*omega... no: by the two elements with coords
/// (a, 0)... columns (a, 0) and (b, c). Norm = a*c.
class QuadIdeal {
 public:
  QuadIdeal(const QuadField& field, const std::vector<QuadElem>& gens) : field_(field) {
    std::vector<std::array<Int, 2>> cols;
    QuadElem w = field.omega();
    for (const QuadElem& g : gens) {
      if (g.is_zero()) continue;
      for (const QuadElem& e : {g, field.mul(g, w)}) {
        auto c = field.coords(e);
        if (!c) throw std::invalid_argument("ideal generator is not an algebraic integer");
        cols.push_back(*c);
      }
    }
    if (cols.empty()) throw std::invalid_argument("ideal needs a nonzero generator");
    reduce(cols);
  }

  const QuadField& field() const { return field_; }
  /// Z-basis elements: a (rational integer direction) and b + c*omega.
  QuadElem basis0() const { return field_.from_coords(a_, Int(0)); }
  QuadElem basis1() const { return field_.from_coords(b_, c_); }
  Int norm() const { return a_ * c_; }

  bool contains(const QuadElem& x) const {
    auto co = field_.coords(x);
    if (!co) return false;
    const auto& [u, v] = *co;
    if (v % c_ != 0) return false;
    Int t = v / c_;
    return (u - t * b_) % a_ == 0;
  }

  QuadIdeal multiply(const QuadIdeal& o) const {
    std::vector<QuadElem> gens;
    for (const QuadElem& x : {basis0(), basis1()})
      for (const QuadElem& y : {o.basis0(), o.basis1()}) gens.push_back(field_.mul(x, y));
    return QuadIdeal(field_, gens);
  }

  QuadIdeal pow(unsigned e) const {
    if (e == 0) return QuadIdeal(field_, {field_.from_int(1)});
    QuadIdeal r = *this;
    for (unsigned i = 1; i < e; ++i) r = r.multiply(*this);
    return r;
  }

  bool operator==(const QuadIdeal& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

 private:
  void reduce(std::vector<std::array<Int, 2>>& cols) {
    // Hermite form of the 2 x n coordinate matrix by column operations.
    Int c = 0, b = 0;
    for (auto& [u, v] : cols) {
      // Fold the omega row first.
      while (v != 0) {
        if (c == 0) {
          std::swap(c, v);
          std::swap(b, u);
        } else {
          Int q = v / c;
          v -= q * c;
          u -= q * b;
          if (v != 0) {
            std::swap(c, v);
            std::swap(b, u);
          }
        }
      }
    }
    Int a = 0;
    for (auto& [u, v] : cols) a = gcd_int(a, u);
    if (a == 0 || c == 0) {
      // One of the rows is empty only for the zero module; the
      // constructor guarantees a nonzero generator g with g*omega also
      // present, which spans rank 2.
      throw std::logic_error("ideal basis degenerated");
    }
    if (c < 0) {
      c = -c;
      b = -b;
    }
    if (a < 0) a = -a;
    b = mod_floor(b, a);
    a_ = a;
    b_ = b;
    c_ = c;
  }

  QuadField field_;
  Int a_, b_, c_;
};

}  // namespace pseudofield
