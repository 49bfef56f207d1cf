#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudofield/algebraic_recon.hpp"
#include "pseudofield/numeric.hpp"
#include "pseudofield/prime_field.hpp"

namespace pseudofield {

struct EnumerationTooLarge : std::domain_error {
  explicit EnumerationTooLarge(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

/// Residue values whose matrix-eigenvalue complexity is certified < B
/// within the given search budget.
inline std::vector<Int> low_complexity_set(const PrimeField& field, unsigned B, unsigned budget) {
  std::vector<Int> s;
  if (B <= 1) return s;  // complexity is always >= 1
  unsigned effective = std::min(budget, B - 1);
  for (Int x = 0; x < field.modulus(); ++x) {
    auto r = f_qbar_oracle(Residue(x, field), effective);
    if (r && r->cost < B) s.push_back(x);
  }
  return s;
}

/// Exact root-existence test for a monic polynomial over F_p:
/// full scan for small p, gcd(X^p - X, f) above that.
inline bool has_root_mod_p(const std::vector<Int>& coeffs, const Int& p) {
  std::size_t deg = coeffs.size() - 1;
  if (p <= 10000) {
    for (Int x = 0; x < p; ++x) {
      Int acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = mod_floor(acc * x + coeffs[i], p);
      if (acc == 0) return true;
    }
    return false;
  }
  auto mul_mod_f = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> prod(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // Reduce modulo the monic f.
    for (std::size_t i = prod.size(); i-- > deg;) {
      Int c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (std::size_t j = 0; j < deg; ++j)
        prod[i - deg + j] = mod_floor(prod[i - deg + j] - c * coeffs[j], p);
    }
    prod.resize(deg);
    return prod;
  };
  // X^p mod f by square-and-multiply.
  std::vector<Int> result(deg, Int(0));
  result[0] = 1;
  std::vector<Int> base(deg, Int(0));
  if (deg == 1) base[0] = mod_floor(-coeffs[0], p);
  else base[1] = 1;
  Int e = p;
  while (e > 0) {
    if ((e & 1) != 0) result = mul_mod_f(result, base);
    base = mul_mod_f(base, base);
    e >>= 1;
  }
  // gcd(X^p - X, f): nontrivial iff f has a root (after the linear-factor
  // product X^p - X).
  if (deg >= 2) result[1] = mod_floor(result[1] - 1, p);
  else result[0] = mod_floor(result[0] - mod_floor(-coeffs[0], p), p);
  std::vector<Int> a = coeffs, b = result;
  auto trim = [](std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b over F_p.
    Int lead_inv_x, lead_inv_y;
    ext_gcd(b.back(), p, lead_inv_x, lead_inv_y);
    Int linv = mod_floor(lead_inv_x, p);
    while (a.size() >= b.size()) {
      Int c = a.back() * linv % p;
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = mod_floor(a[off + i] - c * b[i], p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() >= 2;  // gcd degree >= 1
}

}  // namespace detail

/// Pythagorean-closure probe: true iff x^2 + y^2 is a square mod p for
/// all x, y in the low-complexity set. On failure the first bad pair is
/// reported through the out parameter.
inline bool phi2_check(const PrimeField& field, unsigned B, unsigned budget,
                       std::vector<Int>* counterexample = nullptr) {
  std::vector<Int> s = detail::low_complexity_set(field, B, budget);
  for (const Int& x : s)
    for (const Int& y : s) {
      if (!is_square(Residue(x * x + y * y, field))) {
        if (counterexample) *counterexample = {x, y};
        return false;
      }
    }
  return true;
}

/// Odd-degree (all degrees with complex_case) solvability probe: every
/// monic degree-d polynomial with low-complexity coefficients has a root.
inline bool phi_d_check(const PrimeField& field, unsigned B, unsigned d, unsigned budget,
                        bool complex_case = false, std::vector<Int>* counterexample = nullptr) {
  if (d <= 1) throw std::invalid_argument("phi_d_check: d must be > 1");
  if (!complex_case && d % 2 == 0)
    throw std::invalid_argument("phi_d_check: even d requires complex_case");
  std::vector<Int> s = detail::low_complexity_set(field, B, budget);
  if (!s.empty()) {
    double count = 1;
    for (unsigned i = 0; i < d; ++i) count *= static_cast<double>(s.size());
    if (count > 1e6)
      throw EnumerationTooLarge("phi_d_check: |S|^d = " + std::to_string(s.size()) + "^" +
                                std::to_string(d) + " exceeds the enumeration ceiling");
  }
  if (s.empty()) return true;
  std::vector<std::size_t> idx(d, 0);
  std::vector<Int> coeffs(d + 1, Int(0));
  coeffs[d] = 1;
  while (true) {
    for (unsigned i = 0; i < d; ++i) coeffs[i] = s[idx[i]];
    if (!detail::has_root_mod_p(coeffs, field.modulus())) {
      if (counterexample) counterexample->assign(coeffs.begin(), coeffs.begin() + d);
      return false;
    }
    unsigned pos = 0;
    while (pos < d && ++idx[pos] == s.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  return true;
}

/// Threshold sweep result: which thresholds B satisfy the degree-d
/// solvability formula, and the first counterexample past the maximum.
struct ThresholdReport {
  Int p;
  unsigned d = 0;
  unsigned budget = 0;
  std::optional<unsigned> max_satisfying;
  std::vector<std::vector<Int>> witnesses_of_failure;
  std::vector<std::pair<unsigned, bool>> rows;  // (B, verdict)

  std::string to_json() const {
    std::string out = "{\"p\": " + p.str() + ", \"d\": " + std::to_string(d) +
                      ", \"budget\": " + std::to_string(budget) + ", \"max_satisfying\": ";
    out += max_satisfying ? std::to_string(*max_satisfying) : std::string("null");
    out += ", \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += ", ";
      out += "{\"B\": " + std::to_string(rows[i].first) +
             ", \"holds\": " + (rows[i].second ? "true" : "false") + "}";
    }
    out += "], \"witnesses_of_failure\": [";
    for (std::size_t i = 0; i < witnesses_of_failure.size(); ++i) {
      if (i) out += ", ";
      out += "[";
      for (std::size_t j = 0; j < witnesses_of_failure[i].size(); ++j) {
        if (j) out += ", ";
        out += witnesses_of_failure[i][j].str();
      }
      out += "]";
    }
    out += "]}";
    return out;
  }

  std::string to_csv() const {
    std::string out = "B,holds\n";
    for (const auto& [b, holds] : rows)
      out += std::to_string(b) + "," + (holds ? "true" : "false") + "\n";
    return out;
  }
};

/// Linear scan over B = 0 .. budget+1: the largest satisfying threshold
/// plus the counterexample at the first failure. d = 2 without
/// complex_case means the Pythagorean probe.
inline ThresholdReport max_threshold(const PrimeField& field, unsigned d, unsigned budget,
                                     bool complex_case = false) {
  ThresholdReport report;
  report.p = field.modulus();
  report.d = d;
  report.budget = budget;
  for (unsigned B = 0; B <= budget + 1; ++B) {
    std::vector<Int> cx;
    bool holds = (d == 2 && !complex_case) ? phi2_check(field, B, budget, &cx)
                                           : phi_d_check(field, B, d, budget, complex_case, &cx);
    report.rows.emplace_back(B, holds);
    if (holds) {
      report.max_satisfying = B;
    } else {
      report.witnesses_of_failure.push_back(cx);
      break;
    }
  }
  return report;
}

/// Level occupancy: is some residue of exact complexity n?
inline bool psi_check(const PrimeField& field, unsigned n, unsigned budget) {
  if (n > budget) throw std::invalid_argument("psi_check: n must be <= budget");
  if (n == 0) return false;  // complexity is always >= 1
  for (Int x = 0; x < field.modulus(); ++x) {
    auto r = f_qbar_oracle(Residue(x, field), n);
    if (r && r->cost == n) return true;
  }
  return false;
}

/// Transitivity of the square-based order restricted to the triples
/// whose two difference square-roots have certified complexity < B,
/// checked only when the Pythagorean guard phi2 holds at B. Returns
/// true when no guarded violation exists (vacuously when the guard
/// fails; guard_holds reports which).
inline bool guarded_transitivity_check(const PrimeField& field, unsigned B, unsigned budget,
                                       bool* guard_holds = nullptr) {
  if (field.modulus() % 4 != 3)
    throw BadModulus("guarded transitivity requires p = 3 (mod 4), got p = " +
                     field.modulus().str());
  bool guard = phi2_check(field, B, budget);
  if (guard_holds) *guard_holds = guard;
  if (!guard) return true;  // the argument's precondition fails; nothing to check
  std::vector<Int> low = detail::low_complexity_set(field, B, budget);
  std::size_t n = static_cast<std::size_t>(field.modulus());
  std::vector<char> in_low(n, 0);
  for (const Int& x : low) in_low[static_cast<std::size_t>(x)] = 1;
  // good[d] = 1 iff d is a square whose canonical root is low-complexity.
  std::vector<char> good(n, 0), square(n, 0);
  for (std::size_t dd = 0; dd < n; ++dd) {
    Residue r(Int(dd), field);
    if (!is_square(r)) continue;
    square[dd] = 1;
    Int root = dd == 0 ? Int(0) : sqrt_3mod4(r).value();
    if (in_low[static_cast<std::size_t>(root)]) good[dd] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!good[(b + n - a) % n]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!good[(c + n - b) % n]) continue;
        if (!square[(c + n - a) % n]) return false;
      }
    }
  return true;
}

}  // namespace pseudofield
