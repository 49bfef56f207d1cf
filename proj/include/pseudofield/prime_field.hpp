#pragma once

#include <stdexcept>
#include <utility>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("inverse of zero residue") {}
};
struct NotResidue : std::domain_error {
  NotResidue() : std::domain_error("square root of a non-square residue") {}
};
struct BadModulus : std::domain_error {
  explicit BadModulus(const std::string& what) : std::domain_error(what) {}
};
struct FieldMismatch : std::logic_error {
  FieldMismatch() : std::logic_error("residues from different prime fields") {}
};

/// An odd prime modulus. Primality is checked at construction; a silent
/// composite modulus would invalidate every downstream check.
class PrimeField {
 public:
  explicit PrimeField(Int p) : p_(std::move(p)) {
    if (p_ < 3 || (p_ & 1) == 0 || !is_prime(p_))
      throw BadModulus("modulus must be an odd prime >= 3: " + p_.str());
  }

  const Int& modulus() const { return p_; }
  bool operator==(const PrimeField& other) const { return p_ == other.p_; }
  bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

 private:
  Int p_;
};

/// An element of F_p with canonical representative in [0, p).
/// Immutable; all operations are pure.
class Residue {
 public:
  Residue(Int value, PrimeField field)
      : field_(std::move(field)), value_(mod_floor(std::move(value), field_.modulus())) {}

  const Int& value() const { return value_; }
  const PrimeField& field() const { return field_; }
  const Int& modulus() const { return field_.modulus(); }

  bool is_zero() const { return value_ == 0; }

  Residue operator+(const Residue& o) const {
    check_same(o);
    return Residue(value_ + o.value_, field_);
  }
  Residue operator-(const Residue& o) const {
    check_same(o);
    return Residue(value_ - o.value_, field_);
  }
  Residue operator*(const Residue& o) const {
    check_same(o);
    return Residue(value_ * o.value_, field_);
  }
  Residue operator-() const { return Residue(-value_, field_); }

  bool operator==(const Residue& o) const {
    check_same(o);
    return value_ == o.value_;
  }
  bool operator!=(const Residue& o) const { return !(*this == o); }

  Residue pow(const Int& e) const { return Residue(pow_mod(value_, e, modulus()), field_); }

 private:
  void check_same(const Residue& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  PrimeField field_;
  Int value_;
};

/// Multiplicative inverse via extended Euclid.
inline Residue inv(const Residue& a) {
  if (a.is_zero()) throw ZeroInverse();
  Int x, y;
  ext_gcd(a.value(), a.modulus(), x, y);
  return Residue(x, a.field());
}

/// Euler criterion: a^((p-1)/2) is 0 or 1 exactly for the squares.
inline bool is_square(const Residue& a) {
  if (a.is_zero()) return true;
  Int e = (a.modulus() - 1) / 2;
  return pow_mod(a.value(), e, a.modulus()) == 1;
}

/// Square root for p = 3 (mod 4) via the (p+1)/4 power; returns the
/// canonical root min(r, p-r).
inline Residue sqrt_3mod4(const Residue& a) {
  if (a.modulus() % 4 != 3)
    throw BadModulus("sqrt_3mod4 requires p = 3 (mod 4), got p = " + a.modulus().str());
  if (a.is_zero()) return a;
  if (!is_square(a)) throw NotResidue();
  Int e = (a.modulus() + 1) / 4;
  Int r = pow_mod(a.value(), e, a.modulus());
  Int other = a.modulus() - r;
  return Residue(r <= other ? r : other, a.field());
}

/// The square-based order relation: a <= b iff b - a is a square.
/// A genuine order only when p = 3 (mod 4).
inline bool order_le(const Residue& a, const Residue& b) { return is_square(b - a); }

}  // namespace pseudofield
