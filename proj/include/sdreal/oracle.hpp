#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "rational.hpp"
#include "stream.hpp"

namespace sdreal {

// A closed rational interval certified to contain some real value.
struct Enclosure {
  Rat lo;
  Rat hi;

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool intersects(const Enclosure& o) const {
    return lo <= o.hi && o.lo <= hi;
  }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

// val of the first n digits: sum_{i=1..n} d_i 2^-i, exact.
inline Rat prefix_value(const Stream& s, std::size_t n) {
  Int acc = 0;
  Stream cur = s;
  for (std::size_t i = 0; i < n; ++i) {
    acc = 2 * acc + digit_value(cur.head());
    if (i + 1 < n) cur = cur.tail();
  }
  return Rat(acc, Int(1) << n);
}

// [prefix_value - 2^-n, prefix_value + 2^-n]; contains val(s) for every
// well-formed stream, since the discarded tail contributes at most 2^-n.
inline Enclosure enclosure(const Stream& s, std::size_t n) {
  Rat pv = prefix_value(s, n);
  Rat eps = pow2(-static_cast<long>(n));
  return Enclosure{pv - eps, pv + eps};
}

namespace detail {

inline Stream embed_step(Rat q) {
  static const Rat quarter(1, 4);
  Digit d = q < -quarter  ? Digit::neg
            : q > quarter ? Digit::pos
                          : Digit::zero;
  Rat rest = 2 * q - digit_value(d);
  return cons(d, [rest = std::move(rest)] { return embed_step(rest); });
}

}  // namespace detail

// A canonical stream with val = q. Digit rule at each step: -1 below -1/4,
// +1 above 1/4, else 0; then recurse on 2q - d, which stays in [-1, 1].
inline Stream embed(const Rat& q) {
  if (q < -1 || q > 1)
    throw std::domain_error("embed: " + format_rational(q) +
                            " outside [-1, 1]");
  return detail::embed_step(q);
}

// Rational Heron iteration from seed 1: h_{n+1} = (h_n + q/h_n) / 2.
inline Rat heron_rat(const Rat& q, unsigned n) {
  Rat h = 1;
  for (unsigned i = 0; i < n; ++i) h = (h + q / h) / 2;
  return h;
}

// Certified bracket of sqrt(q) for q in [0, 1], width <= 2^-p, computed by
// bisection with endpoint certificates lo^2 <= q <= hi^2. No floating point
// and no real sqrt anywhere.
inline Enclosure sqrt_bounds(const Rat& q, unsigned p) {
  if (q < 0 || q > 1)
    throw std::domain_error("sqrt_bounds: " + format_rational(q) +
                            " outside [0, 1]");
  if (q == 0) return Enclosure{Rat(0), Rat(0)};
  Rat lo = 0;
  Rat hi = 1;
  for (unsigned i = 0; i < p; ++i) {
    Rat mid = (lo + hi) / 2;
    if (mid * mid <= q)
      lo = mid;
    else
      hi = mid;
  }
  return Enclosure{lo, hi};
}

// sqrt(q) in [e.lo, e.hi]? Decided exactly by squaring:
//   lo <= sqrt(q)  iff  lo <= 0 or lo^2 <= q,
//   sqrt(q) <= hi  iff  hi >= 0 and q <= hi^2.
inline bool encloses_sqrt(const Enclosure& e, const Rat& q) {
  if (q < 0) throw std::domain_error("encloses_sqrt: negative radicand");
  bool lo_ok = e.lo <= 0 || e.lo * e.lo <= q;
  bool hi_ok = e.hi >= 0 && q <= e.hi * e.hi;
  return lo_ok && hi_ok;
}

}  // namespace sdreal
