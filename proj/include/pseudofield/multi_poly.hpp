#pragma once

#include <map>
#include <string>
#include <vector>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

/// Sparse multivariate integer polynomial with a fixed variable count;
/// terms keyed by exponent vectors.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Int& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<std::vector<unsigned>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous(unsigned* degree_out = nullptr) const {
    bool first = true;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      if (first) {
        d = t;
        first = false;
      } else if (t != d) {
        return false;
      }
    }
    if (degree_out) *degree_out = d;
    return true;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<unsigned> e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MultiPoly operator*(const Int& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
  }
  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Substitutes args[i] for variable i; args share a variable count.
  MultiPoly compose(const std::vector<MultiPoly>& args) const {
    if (args.size() != nvars_) throw std::invalid_argument("composition arity mismatch");
    std::size_t n = args.empty() ? 0 : args[0].nvars();
    MultiPoly r(n);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = MultiPoly::constant(n, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) term = term * args[i].pow(e[i]);
      r = r + term;
    }
    return r;
  }

  Int eval(const std::vector<Int>& point) const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
      Int t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) t *= pow_int(point[i], e[i]);
      acc += t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) out += "*x" + std::to_string(i) + "^" + std::to_string(e[i]);
    }
    return out;
  }

 private:
  void check(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  }
  void add_term(const std::vector<unsigned>& e, const Int& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::size_t nvars_;
  std::map<std::vector<unsigned>, Int> terms_;
};

/// F_{l^e} as F_l[t]/(irreducible of degree e); elements are ascending
/// coefficient vectors of length e. Sized for exhaustive sweeps only.
class SmallGF {
 public:
  SmallGF(unsigned long ell, unsigned deg) : ell_(ell), deg_(deg), modpoly_(find_irreducible()) {}

  unsigned long ell() const { return ell_; }
  unsigned deg() const { return deg_; }
  unsigned long size() const {
    unsigned long s = 1;
    for (unsigned i = 0; i < deg_; ++i) s *= ell_;
    return s;
  }
  /// Low coefficients of the monic modulus, ascending.
  const std::vector<unsigned long>& modulus_low() const { return modpoly_; }

  using Elem = std::vector<unsigned long>;

  Elem zero() const { return Elem(deg_, 0); }
  Elem from_index(unsigned long idx) const {
    Elem e(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
      e[i] = idx % ell_;
      idx /= ell_;
    }
    return e;
  }
  Elem from_int(const Int& c) const {
    Elem e(deg_, 0);
    e[0] = static_cast<unsigned long>(mod_floor(c, Int(ell_)));
    return e;
  }
  bool is_zero(const Elem& e) const {
    for (unsigned long v : e)
      if (v != 0) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = (a[i] + b[i]) % ell_;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<unsigned long> prod(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i)
      for (unsigned j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % ell_;
    for (std::size_t i = prod.size(); i-- > deg_;) {
      unsigned long c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < deg_; ++j) {
        unsigned long sub = c * modpoly_[j] % ell_;
        prod[i - deg_ + j] = (prod[i - deg_ + j] + ell_ - sub) % ell_;
      }
    }
    prod.resize(deg_);
    return prod;
  }

  Elem eval(const MultiPoly& p, const std::vector<Elem>& point) const {
    Elem acc = zero();
    for (const auto& [e, c] : p.terms()) {
      Elem t = from_int(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = mul(t, point[i]);
      acc = add(acc, t);
    }
    return acc;
  }

 private:
  /// Lowest monic irreducible of degree deg_ over F_l (low coefficients
  /// ascending); degree 1 uses t itself.
  std::vector<unsigned long> find_irreducible() const {
    if (deg_ == 1) return {0};
    std::vector<unsigned long> low(deg_, 0);
    while (true) {
      if (!has_factor(low)) return low;
      unsigned i = 0;
      while (i < deg_ && ++low[i] == ell_) {
        low[i] = 0;
        ++i;
      }
      if (i == deg_) throw std::logic_error("no irreducible found");
    }
  }
  /// Trial division by all monic polynomials of degree <= deg_/2.
  bool has_factor(const std::vector<unsigned long>& low) const {
    for (unsigned d = 1; d <= deg_ / 2; ++d) {
      unsigned long count = 1;
      for (unsigned i = 0; i < d; ++i) count *= ell_;
      for (unsigned long idx = 0; idx < count; ++idx) {
        std::vector<unsigned long> div(d + 1, 1);
        unsigned long t = idx;
        for (unsigned i = 0; i < d; ++i) {
          div[i] = t % ell_;
          t /= ell_;
        }
        // Remainder of (x^deg + low) by div.
        std::vector<unsigned long> rem(deg_ + 1, 0);
        for (unsigned i = 0; i < deg_; ++i) rem[i] = low[i];
        rem[deg_] = 1;
        for (std::size_t i = rem.size(); i-- > d;) {
          unsigned long c = rem[i];
          if (c == 0) continue;
          rem[i] = 0;
          for (unsigned j = 0; j < d; ++j)
            rem[i - d + j] = (rem[i - d + j] + ell_ - c * div[j] % ell_) % ell_;
        }
        bool zero = true;
        for (unsigned long v : rem)
          if (v != 0) zero = false;
        if (zero) return true;
      }
    }
    return false;
  }

  unsigned long ell_;
  unsigned deg_;
  std::vector<unsigned long> modpoly_;
};

}  // namespace pseudofield
