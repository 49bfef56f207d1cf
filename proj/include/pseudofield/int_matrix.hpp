#pragma once

#include <cstdint>
#include <vector>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

/// Dense square matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {}
  IntMatrix(std::size_t n, std::vector<Int> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) throw std::invalid_argument("entry count mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix scalar(std::size_t n, const Int& c) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  std::size_t size() const { return n_; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<Int>& entries() const { return entries_; }

  Int entry_bound() const {
    Int b = 0;
    for (const Int& e : entries_) b = std::max(b, abs_int(e));
    return b;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
    return out;
  }
  IntMatrix operator-() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
  }
  IntMatrix operator*(const Int& c) const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
    return out;
  }
  IntMatrix operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

  Int trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

 private:
  std::size_t n_;
  std::vector<Int> entries_;
};

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  std::size_t na = a.size(), nb = b.size();
  IntMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

/// det(M - shift*I) mod p by Gaussian elimination, with a machine-word
/// lane for moduli that fit.
inline Int det_shift_mod(const IntMatrix& mat, const Int& shift, const Int& p) {
  std::size_t n = mat.size();
  if (p < (Int(1) << 31)) {
    std::uint64_t pp = static_cast<std::uint64_t>(p);
    std::uint64_t sh = static_cast<std::uint64_t>(mod_floor(shift, p));
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t v = static_cast<std::uint64_t>(mod_floor(mat.at(i, j), p));
        if (i == j) v = (v + pp - sh) % pp;
        a[i * n + j] = v;
      }
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv * n + col] == 0) ++piv;
      if (piv == n) return 0;
      if (piv != col) {
        for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
        det = pp - det;
        if (det == pp) det = 0;
      }
      std::uint64_t pivot = a[col * n + col];
      det = det * pivot % pp;
      // pivot^{-1} mod p
      std::uint64_t inv = static_cast<std::uint64_t>(
          mod_floor(Int([&] { Int x, y; ext_gcd(Int(pivot), p, x, y); return x; }()), p));
      for (std::size_t row = col + 1; row < n; ++row) {
        std::uint64_t factor = a[row * n + col] * inv % pp;
        if (factor == 0) continue;
        for (std::size_t j = col; j < n; ++j) {
          std::uint64_t sub = factor * a[col * n + j] % pp;
          a[row * n + j] = (a[row * n + j] + pp - sub) % pp;
        }
      }
    }
    return Int(det % pp);
  }
  // Generic lane.
  std::vector<Int> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int v = mod_floor(mat.at(i, j), p);
      if (i == j) v = mod_floor(v - shift, p);
      a[i * n + j] = v;
    }
  Int det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      det = mod_floor(-det, p);
    }
    det = det * a[col * n + col] % p;
    Int x, y;
    ext_gcd(a[col * n + col], p, x, y);
    Int inv = mod_floor(x, p);
    for (std::size_t row = col + 1; row < n; ++row) {
      Int factor = a[row * n + col] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        a[row * n + j] = mod_floor(a[row * n + j] - factor * a[col * n + j], p);
    }
  }
  return det;
}

/// Monic characteristic polynomial det(lambda*I - M), ascending
/// coefficients, by the Faddeev-LeVerrier recurrence (all intermediate
/// divisions are exact over Z).
inline std::vector<Int> char_poly(const IntMatrix& m) {
  std::size_t n = m.size();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix aux = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    Int c = -aux.trace() / Int(k);
    coeffs[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) aux.at(i, i) += c;
  }
  return coeffs;
}

}  // namespace pseudofield
