#pragma once

#include <cassert>
#include <cstddef>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"
#include "stream.hpp"

namespace sdreal {

// Digit-level operators. Each one is a small corecursive rewrite on the
// head digits; the value equations they satisfy are given alongside.

// val(plus_one(s)) = min(val(s) + 1, 1), i.e. x |-> x + 1 clamped at 1.
// Rules: -1 v -> 1 v ; 0 v -> 1 plus_one(v) ; 1 v -> constant 1.
inline Stream plus_one(const Stream& s) {
  auto [d, v] = uncons(s);
  switch (d) {
    case Digit::neg:
      return cons(Digit::pos, v);
    case Digit::zero:
      return cons(Digit::pos, [v = std::move(v)] { return plus_one(v); });
    case Digit::pos:
      return constant(Digit::pos);
  }
  assert(false);
  return s;
}

// val(minus_one(s)) = max(val(s) - 1, -1). Mirror of plus_one.
inline Stream minus_one(const Stream& s) {
  auto [d, v] = uncons(s);
  switch (d) {
    case Digit::pos:
      return cons(Digit::neg, v);
    case Digit::zero:
      return cons(Digit::neg, [v = std::move(v)] { return minus_one(v); });
    case Digit::neg:
      return constant(Digit::neg);
  }
  assert(false);
  return s;
}

// val(times_two(s)) = 2 val(s), defined for val(s) in [-1/2, 1/2]:
//   -1 u -> minus_one(u) ; 0 u -> u ; 1 u -> plus_one(u).
// Outside the contract it still yields a stream, just not of 2 val(s).
inline Stream times_two(const Stream& s) {
  auto [d, u] = uncons(s);
  switch (d) {
    case Digit::neg:
      return minus_one(u);
    case Digit::zero:
      return u;
    case Digit::pos:
      return plus_one(u);
  }
  assert(false);
  return s;
}

// val(half_plus_quarter(s)) = val(s)/2 + 1/4:
//   -1 u -> 0 0 u ; 0 u -> 0 1 u ; 1 u -> 1 0 u.
inline Stream half_plus_quarter(const Stream& s) {
  auto [d, u] = uncons(s);
  switch (d) {
    case Digit::neg:
      return cons(Digit::zero, cons(Digit::zero, u));
    case Digit::zero:
      return cons(Digit::zero, cons(Digit::pos, u));
    case Digit::pos:
      return cons(Digit::pos, cons(Digit::zero, u));
  }
  assert(false);
  return s;
}

// val(half_minus_quarter(s)) = val(s)/2 - 1/4:
//   -1 u -> -1 0 u ; 0 u -> 0 -1 u ; 1 u -> 0 0 u.
inline Stream half_minus_quarter(const Stream& s) {
  auto [d, u] = uncons(s);
  switch (d) {
    case Digit::neg:
      return cons(Digit::neg, cons(Digit::zero, u));
    case Digit::zero:
      return cons(Digit::zero, cons(Digit::neg, u));
    case Digit::pos:
      return cons(Digit::zero, cons(Digit::zero, u));
  }
  assert(false);
  return s;
}

// val(negate(s)) = -val(s), digitwise.
inline Stream negate(const Stream& s) {
  auto [d, v] = uncons(s);
  return cons(negated(d), [v = std::move(v)] { return negate(v); });
}

namespace detail {

// Carry state for average: (j, u, v) denotes (j + val(u) + val(v)) / 4
// with carry j in [-2, 2]. One step reads a digit from each side, forming
// k = 2j + a + b in [-6, 6]; the emitted digit is sign(k) when |k| >= 3,
// else 0, and the new carry k - 4d stays in [-2, 2].
inline Stream average_step(int carry, const Stream& u, const Stream& v) {
  auto [a, u2] = uncons(u);
  auto [b, v2] = uncons(v);
  int k = 2 * carry + digit_value(a) + digit_value(b);
  int d = k <= -3 ? -1 : k >= 3 ? 1 : 0;
  int next = k - 4 * d;
  assert(-2 <= next && next <= 2);
  return cons(digit_from_int(d),
              [next, u2 = std::move(u2), v2 = std::move(v2)] {
                return average_step(next, u2, v2);
              });
}

}  // namespace detail

// val(average(x, y)) = (val(x) + val(y)) / 2, total on [-1, 1]^2.
inline Stream average(const Stream& x, const Stream& y) {
  auto [a, u] = uncons(x);
  auto [b, v] = uncons(y);
  return detail::average_step(digit_value(a) + digit_value(b), u, v);
}

namespace detail {

// Division state. read_depth digits have been consumed from each operand,
// giving integer prefix numerators num_a, num_b with
//   val(a) in [num_a - 1, num_a + 1] / 2^read_depth,
//   val(b) in [num_b - 1, num_b + 1] / 2^read_depth,
// and emitted digits d_1..d_n with scaled sum s = sum d_i 2^(n-i), so the
// still-to-be-produced suffix value lies in z = 2^n * (X / Y) - s.
struct DivState {
  Stream a;
  Stream b;
  std::size_t read_depth = 0;
  Int num_a = 0;
  Int num_b = 0;
  Int emitted_scaled = 0;
  std::size_t emitted = 0;

  DivState(Stream a_, Stream b_) : a(std::move(a_)), b(std::move(b_)) {}

  void refine() {
    num_a = 2 * num_a + digit_value(a.head());
    num_b = 2 * num_b + digit_value(b.head());
    a = a.tail();
    b = b.tail();
    ++read_depth;
  }
};

constexpr int div_max_refine_rounds = 64;

// Pick the next quotient digit. Interval arithmetic on exact rationals:
// the quotient corners divide out the common 2^read_depth scale, the
// residual z is clamped to [-1, 1] (an empty clamp certifies the
// precondition was violated), and a digit d is sound iff [z interval] fits
// in [(d - 1) / 2, (d + 1) / 2], i.e. 2 hi - 1 <= d <= 2 lo + 1. The
// preferred digit is the one the midpoint of the residual enclosure rounds
// to under the same +-1/4 thresholds embed uses; if that digit is not yet
// sound the remaining candidates are tried before refining further.
// Refusal to separate the denominator from zero within
// div_max_refine_rounds reads is also reported as a precondition failure.
// One unconditional read per digit keeps the operand enclosures shrinking,
// so a violated contract is always refuted eventually instead of
// saturating at the clamp.
inline Digit div_choose(DivState& st) {
  st.refine();
  for (int round = 0; round < div_max_refine_rounds; ++round) {
    if (st.num_b - 1 > 0) {
      Int xl = st.num_a - 1;
      Int xh = st.num_a + 1;
      Int yl = st.num_b - 1;
      Int yh = st.num_b + 1;
      // Residual bounds zl = nl/dl, zh = nh/dh with positive denominators;
      // everything below cross-multiplies instead of normalizing rationals,
      // which keeps this loop off the gcd path.
      Int dl = xl >= 0 ? yh : yl;
      Int dh = xh >= 0 ? yl : yh;
      Int p2 = Int(1) << st.emitted;
      Int nl = p2 * xl - st.emitted_scaled * dl;
      Int nh = p2 * xh - st.emitted_scaled * dh;
      if (nl < -dl) nl = -dl;
      if (nh > dh) nh = dh;
      if (nl * dh > nh * dl)
        throw precondition_error(
            "divide: |numerator| <= denominator violated");
      auto admissible = [&](int d) {
        return 2 * nh <= (d + 1) * dh && (d - 1) * dl <= 2 * nl;
      };
      // Twice the midpoint, compared against +-1/2 by cross-multiplication.
      Int mid_num = 2 * (nl * dh + nh * dl);
      Int half_den = dl * dh;
      int preferred = mid_num > half_den ? 1 : mid_num < -half_den ? -1 : 0;
      for (int d : {preferred, 0, 1, -1}) {
        if (admissible(d)) {
          st.emitted_scaled = 2 * st.emitted_scaled + d;
          ++st.emitted;
          return digit_from_int(d);
        }
      }
    }
    st.refine();
  }
  throw precondition_error(
      "divide: denominator not bounded away from zero after " +
      std::to_string(div_max_refine_rounds) + " digits");
}

inline Stream div_digits(DivState st) {
  Digit d = div_choose(st);
  return cons(d, [st = std::move(st)] { return div_digits(st); });
}

}  // namespace detail

// val(divide(a, b)) = val(a) / val(b), requiring |val(a)| <= val(b) and
// val(b) >= 1/4. Digits are chosen from a shrinking exact enclosure of the
// quotient; violations of the contract surface as precondition_error once
// the enclosure proves them.
inline Stream divide(const Stream& a, const Stream& b) {
  return detail::div_digits(detail::DivState(a, b));
}

}  // namespace sdreal
