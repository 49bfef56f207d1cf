#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudofield/numeric.hpp"
#include "pseudofield/prime_field.hpp"

namespace pseudofield {

/// A signed fraction +-n/m certifying an f_Q value: max(n, m) is the
/// reported complexity and sign*n*inv(m) = x (mod p).
struct RationalWitness {
  Int numerator;    // n >= 0
  Int denominator;  // m >= 1
  bool negative = false;

  bool operator==(const RationalWitness& o) const {
    return numerator == o.numerator && denominator == o.denominator && negative == o.negative;
  }

  std::string str() const {
    return (negative ? "-" : "+") + numerator.str() + "/" + denominator.str();
  }
};

struct FqResult {
  Int value;
  RationalWitness witness;

  bool operator==(const FqResult& o) const { return value == o.value && witness == o.witness; }
};

inline bool witness_matches(const RationalWitness& w, const Residue& x) {
  Int lhs = mod_floor(x.value() * w.denominator, x.modulus());
  Int rhs = mod_floor(w.negative ? Int(-w.numerator) : w.numerator, x.modulus());
  return lhs == rhs;
}

namespace detail {

/// First witness with max(n, m) == t in tie-break order (n ascending,
/// sign + before -), or nullopt. inv_x = x^{-1} mod p, x != 0.
inline std::optional<RationalWitness> witness_at_value(const Int& t, const Int& inv_x,
                                                       const Int& p) {
  for (Int n = 1; n <= t; ++n) {
    for (int s = 0; s < 2; ++s) {
      Int m = mod_floor(s == 0 ? Int(n * inv_x) : Int(-n * inv_x), p);
      if (m >= 1 && m <= t && (n == t || m == t)) return RationalWitness{n, m, s == 1};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive minimum of max(n, m) over all signed fractions congruent
/// to x. Scans t = 1, 2, ... and returns the first hit.
inline FqResult f_q_oracle(const Residue& x) {
  if (x.is_zero()) return {1, {0, 1, false}};
  Int inv_x = inv(x).value();
  for (Int t = 1; t < x.modulus(); ++t) {
    if (auto w = detail::witness_at_value(t, inv_x, x.modulus())) return {t, *w};
  }
  throw std::logic_error("f_q_oracle: no witness found");  // unreachable: x = (p-1)/1 always works
}

/// Same value and witness as f_q_oracle, from the extended Euclidean
/// remainder sequence on (p, x). The full sequence is scanned, plus the
/// sup-norm-optimal intermediate of each division step, because the
/// minimum ranges over both signs rather than the unique-reconstruction
/// regime.
inline FqResult f_q_fast(const Residue& x) {
  if (x.is_zero()) return {1, {0, 1, false}};
  const Int& p = x.modulus();
  Int r_prev = p, r_cur = x.value();
  Int t_prev = 0, t_cur = 1;
  Int best = p;  // max(p-1, 1) is always attainable via (p-1)/1 or 1/...
  auto consider = [&](const Int& r, const Int& t) {
    if (r <= 0 || t == 0) return;
    Int cand = std::max(r, abs_int(t));
    if (cand < best) best = cand;
  };
  consider(r_cur, t_cur);
  while (r_cur != 0) {
    Int q = r_prev / r_cur;
    // max(r_prev - j*r_cur, |t_prev| + j*|t_cur|) is minimized near the
    // crossing of the two lines; check the neighbors of the crossing too.
    Int denom = r_cur + abs_int(t_cur);
    if (denom > 0) {
      Int j_star = (r_prev - abs_int(t_prev)) / denom;
      for (Int j : {Int(j_star - 1), j_star, Int(j_star + 1)}) {
        if (j >= 1 && j <= q) consider(r_prev - j * r_cur, t_prev - j * t_cur);
      }
    }
    Int r_next = r_prev - q * r_cur;
    Int t_next = t_prev - q * t_cur;
    consider(r_next, t_next);
    r_prev = r_cur; r_cur = r_next;
    t_prev = t_cur; t_cur = t_next;
  }
  Int inv_x = inv(x).value();
  auto w = detail::witness_at_value(best, inv_x, p);
  if (!w) throw std::logic_error("f_q_fast: candidate value has no witness");
  return {best, *w};
}

struct FqViolation {
  std::string law;  // "sum", "product", "negation", "inverse"
  Int a, b;
};

/// Exhaustive verification of the four f_Q growth laws over all pairs.
struct BoundReport {
  Int p;
  std::uint64_t pairs_checked = 0;
  std::vector<FqViolation> violations;

  std::string to_json() const {
    std::string out = "{\"p\": " + p.str() +
                      ", \"pairs_checked\": " + std::to_string(pairs_checked) +
                      ", \"violations\": [";
    bool first = true;
    for (const auto& v : violations) {
      if (!first) out += ", ";
      first = false;
      out += "{\"law\": \"" + v.law + "\", \"a\": " + v.a.str() + ", \"b\": " + v.b.str() + "}";
    }
    out += "]}";
    return out;
  }
};

inline BoundReport check_fq_bounds(const PrimeField& field) {
  const Int& p = field.modulus();
  std::size_t n = static_cast<std::size_t>(p);
  std::vector<Int> f(n);
  std::vector<std::size_t> invs(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Residue x(Int(i), field);
    f[i] = f_q_fast(x).value;
    if (i != 0) invs[i] = static_cast<std::size_t>(inv(x).value());
  }
  BoundReport report{p, 0, {}};
  for (std::size_t a = 0; a < n; ++a) {
    // Unary laws once per element.
    std::size_t neg = (n - a) % n;
    if (f[neg] != f[a]) report.violations.push_back({"negation", Int(a), Int(0)});
    if (a != 0 && f[invs[a]] != f[a]) report.violations.push_back({"inverse", Int(a), Int(0)});
    for (std::size_t b = 0; b < n; ++b) {
      ++report.pairs_checked;
      if (f[(a + b) % n] > 2 * f[a] * f[b]) report.violations.push_back({"sum", Int(a), Int(b)});
      if (f[a * b % n] > f[a] * f[b]) report.violations.push_back({"product", Int(a), Int(b)});
    }
  }
  return report;
}

}  // namespace pseudofield
