#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudofield {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

/// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int pow_mod(Int base, Int exp, const Int& mod) {
  if (mod == 1) return 0;
  Int result = 1;
  base = mod_floor(base, mod);
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

inline Int pow_int(Int base, unsigned long exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

/// ceil(log2(t)) for t >= 1, with ceil_log2(1) = 0.
inline unsigned ceil_log2(const Int& t) {
  if (t < 1) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  unsigned bits = 0;
  Int v = t - 1;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

/// Deterministic Miller-Rabin, valid for all n < 3.3e24 with these bases.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 0; i + 1 < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Trial-division factorization of |n| into (prime, exponent) pairs.
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
  n = abs_int(n);
  std::vector<std::pair<Int, unsigned>> out;
  if (n <= 1) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// All positive divisors of |n|, ascending. n must be nonzero.
inline std::vector<Int> divisors(const Int& n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  auto fac = factor_integer(n);
  std::vector<Int> out{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "a/b" or "a" into an exact rational.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace pseudofield
