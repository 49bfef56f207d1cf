#pragma once

#include <vector>

#include "pseudofield/int_poly.hpp"
#include "pseudofield/numeric.hpp"

namespace pseudofield {

/// Open segment with rational endpoints, lo < hi.
struct RationalInterval {
  Rat lo;
  Rat hi;

  RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("interval must have positive length");
  }
  Rat length() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

namespace detail {

/// Pseudo-remainder based primitive remainder of a mod b, sign chosen
/// so the chain below is a valid Sturm sequence up to positive factors.
inline IntPoly sturm_rem(const IntPoly& a, const IntPoly& b) {
  // Multiply a by a positive power of |lc(b)| so division is integral.
  IntPoly rem = a;
  Int lead = b.leading();
  Int lead2 = lead * lead;  // positive, preserves signs
  std::size_t db = static_cast<std::size_t>(b.degree());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t dr = static_cast<std::size_t>(rem.degree());
    IntPoly shift = IntPoly::monomial(dr - db, rem.leading() * lead);
    rem = rem * lead2 - shift * b;
    if (!rem.is_zero() && rem.degree() >= static_cast<int>(dr))
      throw std::logic_error("sturm_rem: degree did not drop");
  }
  return rem;
}

}  // namespace detail

/// Sturm chain of f: f, f', then negated primitive remainders.
inline std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain;
  if (f.is_zero()) return chain;
  chain.push_back(primitive_part(f));
  IntPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_part(d));
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = detail::sturm_rem(a, b);
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

namespace detail {

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline unsigned sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  unsigned var = 0;
  int prev = 0;
  for (const IntPoly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace detail

/// Number of distinct real roots of f in the open interval (lo, hi);
/// endpoints that are roots are excluded.
inline unsigned sturm_root_count(const IntPoly& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero()) throw ZeroPolynomial();
  std::vector<IntPoly> chain = sturm_chain(f);
  unsigned count =
      detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
  // V(lo) - V(hi) counts roots in (lo, hi]; drop a root sitting at hi.
  if (f.eval(hi) == 0 && count > 0) --count;
  return count;
}

inline unsigned sturm_root_count(const IntPoly& f, const RationalInterval& i) {
  return sturm_root_count(f, i.lo, i.hi);
}

/// Shrinks (lo, hi), assumed to contain at least one root, to a
/// subinterval containing exactly one root of f, with non-root
/// endpoints. Bisection; termination needs f nonzero.
inline RationalInterval isolate_single_root(const IntPoly& f, RationalInterval i) {
  if (sturm_root_count(f, i) == 0)
    throw std::invalid_argument("isolate_single_root: no root in the interval");
  while (true) {
    if (f.eval(i.lo) == 0 || f.eval(i.hi) == 0)
      throw std::invalid_argument("isolate_single_root: endpoint is a root");
    if (sturm_root_count(f, i) == 1) return i;
    Rat mid = i.midpoint();
    if (f.eval(mid) == 0) {
      // Nudge the split point off the root.
      mid = (i.lo + mid) / 2;
      if (f.eval(mid) == 0) mid = (i.lo + mid) / 2;
    }
    RationalInterval left(i.lo, mid);
    i = sturm_root_count(f, left) >= 1 ? left : RationalInterval(mid, i.hi);
  }
}

}  // namespace pseudofield
