#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pseudofield/int_matrix.hpp"
#include "pseudofield/numeric.hpp"
#include "pseudofield/prime_field.hpp"

namespace pseudofield {

struct BudgetTooLarge : std::domain_error {
  explicit BudgetTooLarge(unsigned budget, unsigned ceiling)
      : std::domain_error("search budget " + std::to_string(budget) +
                          " exceeds ceiling " + std::to_string(ceiling)) {}
};
struct ZeroTarget : std::domain_error {
  ZeroTarget() : std::domain_error("witness target must be nonzero") {}
};
struct NotARoot : std::domain_error {
  NotARoot() : std::domain_error("given residue is not a root of the polynomial") {}
};

/// A certificate that k*target is an eigenvalue mod p of an integer
/// matrix M with entries bounded by m. Its cost n + ceil_log2(max(m, k))
/// upper-bounds the matrix-eigenvalue complexity of the target.
struct AlgebraicWitness {
  IntMatrix matrix;
  Int multiplier;   // k >= 1
  Int entry_bound;  // declared m, all |entries| <= m
  Residue target;

  unsigned cost() const {
    Int t = std::max(entry_bound, multiplier);
    return static_cast<unsigned>(matrix.size()) + ceil_log2(std::max(t, Int(1)));
  }

  std::string to_json() const {
    std::string out = "{\"p\": \"" + target.modulus().str() + "\", \"target\": \"" +
                      target.value().str() + "\", \"k\": \"" + multiplier.str() +
                      "\", \"n\": " + std::to_string(matrix.size()) + ", \"m\": \"" +
                      entry_bound.str() + "\", \"entries\": [";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      if (i) out += ", ";
      out += "[";
      for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (j) out += ", ";
        out += "\"" + matrix.at(i, j).str() + "\"";
      }
      out += "]";
    }
    out += "], \"cost\": " + std::to_string(cost()) + "}";
    return out;
  }
};

/// True iff the eigenvalue congruence det(M - k*x*I) = 0 (mod p) holds
/// and the declared bounds are consistent.
inline bool verify_witness(const AlgebraicWitness& w) {
  if (w.multiplier < 1) return false;
  if (w.matrix.entry_bound() > w.entry_bound) return false;
  const Int& p = w.target.modulus();
  Int shift = mod_floor(w.multiplier * w.target.value(), p);
  return det_shift_mod(w.matrix, shift, p) == 0;
}

struct FqbarResult {
  unsigned cost;
  AlgebraicWitness witness;
};

enum class Restriction { kUnrestricted, kStandardSmallBound, kExactlyOne };

/// Per-axis restrictions on the witness search. At least one axis must
/// stay unrestricted (all three restricted collapses to {-1, 0, 1}).
struct VariantSpec {
  Restriction size = Restriction::kUnrestricted;
  Restriction denominator = Restriction::kUnrestricted;
  Restriction entries = Restriction::kUnrestricted;
  // Cap used by the kStandardSmallBound restriction.
  Int small_bound = 4;
};

namespace detail {

inline Int axis_cap(Restriction r, const Int& unrestricted_cap, const Int& small_bound) {
  switch (r) {
    case Restriction::kUnrestricted: return unrestricted_cap;
    case Restriction::kStandardSmallBound: return std::min(unrestricted_cap, small_bound);
    case Restriction::kExactlyOne: return std::min(unrestricted_cap, Int(1));
  }
  return unrestricted_cap;
}

/// Enumerates matrices with entries in [-m, m] in row-major
/// lexicographic order, calling fn(matrix); stops early if fn returns true.
inline bool enumerate_matrices(std::size_t n, const Int& m,
                               const std::function<bool(const IntMatrix&)>& fn) {
  std::size_t cells = n * n;
  IntMatrix mat(n);
  std::vector<Int> cur(cells, -m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = -m;
  while (true) {
    if (fn(mat)) return true;
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      Int& c = mat.at(pos / n, pos % n);
      if (c < m) {
        ++c;
        break;
      }
      c = -m;
      if (pos == 0) return false;
    }
  }
}

}  // namespace detail

/// Budget-bounded exhaustive search for a minimal-cost witness, with the
/// fixed enumeration order: cost ascending, then n, m, k, row-major
/// entries. Returns nullopt when no witness of cost <= budget exists.
inline std::optional<FqbarResult> f_variant_oracle(const Residue& x, unsigned budget,
                                                   const VariantSpec& variant,
                                                   unsigned ceiling = 6) {
  if (budget > ceiling) throw BudgetTooLarge(budget, ceiling);
  const Int& p = x.modulus();
  for (unsigned c = 1; c <= budget; ++c) {
    unsigned size_cap_u = c;
    Int n_cap = detail::axis_cap(variant.size, Int(size_cap_u), variant.small_bound);
    for (std::size_t n = 1; Int(n) <= n_cap; ++n) {
      unsigned r = c - static_cast<unsigned>(n);
      Int bound = Int(1) << r;
      Int m_cap = detail::axis_cap(variant.entries, bound, variant.small_bound);
      Int k_cap = detail::axis_cap(variant.denominator, bound, variant.small_bound);
      for (Int m = 0; m <= m_cap; ++m) {
        for (Int k = 1; k <= k_cap; ++k) {
          Int t = std::max(std::max(m, k), Int(1));
          if (static_cast<unsigned>(n) + ceil_log2(t) != c) continue;  // covered at a lower cost
          Int shift = mod_floor(k * x.value(), p);
          std::optional<FqbarResult> found;
          detail::enumerate_matrices(n, m, [&](const IntMatrix& mat) {
            if (det_shift_mod(mat, shift, p) == 0) {
              found = FqbarResult{c, AlgebraicWitness{mat, k, m, x}};
              return true;
            }
            return false;
          });
          if (found) return found;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<FqbarResult> f_qbar_oracle(const Residue& x, unsigned budget,
                                                unsigned ceiling = 6) {
  return f_variant_oracle(x, budget, VariantSpec{}, ceiling);
}

namespace detail {

inline void check_same_field(const AlgebraicWitness& a, const AlgebraicWitness& b) {
  if (a.target.field() != b.target.field()) throw FieldMismatch();
}

}  // namespace detail

/// Witness for a*b via the Kronecker product M (x) M'.
inline AlgebraicWitness witness_product(const AlgebraicWitness& wa, const AlgebraicWitness& wb) {
  detail::check_same_field(wa, wb);
  return AlgebraicWitness{kronecker(wa.matrix, wb.matrix), wa.multiplier * wb.multiplier,
                          wa.entry_bound * wb.entry_bound, wa.target * wb.target};
}

/// Witness for a+b via M (x) k'I + kI (x) M'.
inline AlgebraicWitness witness_sum(const AlgebraicWitness& wa, const AlgebraicWitness& wb) {
  detail::check_same_field(wa, wb);
  std::size_t na = wa.matrix.size(), nb = wb.matrix.size();
  IntMatrix m = kronecker(wa.matrix, IntMatrix::scalar(nb, wb.multiplier)) +
                kronecker(IntMatrix::scalar(na, wa.multiplier), wb.matrix);
  return AlgebraicWitness{std::move(m), wa.multiplier * wb.multiplier,
                          wa.entry_bound * wb.multiplier + wb.entry_bound * wa.multiplier,
                          wa.target + wb.target};
}

/// Witness for -a: negate the matrix, cost unchanged.
inline AlgebraicWitness witness_neg(const AlgebraicWitness& w) {
  return AlgebraicWitness{-w.matrix, w.multiplier, w.entry_bound, -w.target};
}

/// Witness for a^{-1} from the reversed characteristic polynomial
/// P(x) = x^n p_M(1/x): a companion-style matrix with super-diagonal
/// k*c_d and last row -k*c_0 ... -k*c_{d-1} has c_d * a^{-1} as an
/// eigenvalue. The sign is normalized so the multiplier is positive.
inline AlgebraicWitness witness_inverse(const AlgebraicWitness& w) {
  if (w.target.is_zero()) throw ZeroTarget();
  std::vector<Int> cp = char_poly(w.matrix);  // ascending: cp[j] coeff of lambda^j
  std::size_t n = w.matrix.size();
  // Reversed polynomial: coefficient of x^i is cp[n - i]; constant term is 1.
  std::vector<Int> rev(n + 1);
  for (std::size_t i = 0; i <= n; ++i) rev[i] = cp[n - i];
  std::size_t d = n;
  while (d > 0 && rev[d] == 0) --d;
  if (d == 0)
    throw std::domain_error("witness_inverse: degenerate witness (nilpotent matrix mod p)");
  IntMatrix c(d);
  for (std::size_t i = 0; i + 1 < d; ++i) c.at(i, i + 1) = rev[d];
  for (std::size_t j = 0; j < d; ++j) c.at(d - 1, j) = -rev[j];
  IntMatrix m = c * w.multiplier;
  Int mult = rev[d];
  if (mult < 0) {
    m = -m;
    mult = -mult;
  }
  Int bound = m.entry_bound();
  return AlgebraicWitness{std::move(m), mult, bound, inv(w.target)};
}

/// Witness for a root x of the monic polynomial x^D + sum c_i x^i whose
/// coefficients are the witness targets, via the block companion matrix
/// of K-blocks and scaled Kronecker blocks.
inline AlgebraicWitness witness_poly_root(const std::vector<AlgebraicWitness>& coeffs,
                                          const Residue& x) {
  if (coeffs.empty()) throw std::invalid_argument("witness_poly_root: degree must be >= 1");
  std::size_t deg = coeffs.size();
  const Int& p = x.modulus();
  // Root check: x^deg + sum coeff_i * x^i = 0 (mod p).
  Int acc = pow_mod(x.value(), Int(deg), p);
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs[i].target.field() != x.field()) throw FieldMismatch();
    acc += coeffs[i].target.value() * pow_mod(x.value(), Int(i), p);
  }
  if (mod_floor(acc, p) != 0) throw NotARoot();

  std::size_t big = 1;
  Int k = 1;
  for (const auto& w : coeffs) {
    big *= w.matrix.size();
    k *= w.multiplier;
  }
  // M_i' = (prod_{j != i} k_j) * I_{n_0..n_{i-1}} (x) M_i (x) I_{n_{i+1}..}.
  std::vector<IntMatrix> blocks;
  blocks.reserve(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    std::size_t pre = 1, post = 1;
    Int scale = 1;
    for (std::size_t j = 0; j < deg; ++j) {
      if (j == i) continue;
      scale *= coeffs[j].multiplier;
      if (j < i) pre *= coeffs[j].matrix.size();
      else post *= coeffs[j].matrix.size();
    }
    IntMatrix b = kronecker(kronecker(IntMatrix::identity(pre), coeffs[i].matrix),
                            IntMatrix::identity(post)) *
                  scale;
    blocks.push_back(std::move(b));
  }
  IntMatrix m(deg * big);
  for (std::size_t r = 0; r + 1 < deg; ++r)
    for (std::size_t i = 0; i < big; ++i) m.at(r * big + i, (r + 1) * big + i) = k;
  for (std::size_t cb = 0; cb < deg; ++cb)
    for (std::size_t i = 0; i < big; ++i)
      for (std::size_t j = 0; j < big; ++j)
        m.at((deg - 1) * big + i, cb * big + j) = -blocks[cb].at(i, j);
  Int bound = m.entry_bound();
  return AlgebraicWitness{std::move(m), k, bound, x};
}

}  // namespace pseudofield
