#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "limit.hpp"
#include "stream.hpp"
#include "transforms.hpp"

namespace sdreal {

// Least n with p <= 2^n, for p >= 1. ceil_log2(1) = 0, ceil_log2(4) = 2,
// ceil_log2(5) = 3.
inline unsigned ceil_log2(unsigned p) {
  if (p == 0) throw std::domain_error("ceil_log2: argument must be positive");
  unsigned n = 0;
  unsigned long long reach = 1;
  while (reach < p) {
    reach *= 2;
    ++n;
  }
  return n;
}

// Modulus p |-> p. Valid for the Heron iterates of any radicand in [0, 1]:
// the n-th iterate is within 2^-n of the root.
inline Modulus identity_modulus() {
  return [](unsigned p) { return p; };
}

// Modulus p |-> ceil_log2(p). For radicands in [1/4, 1] the n-th Heron
// iterate is within 2^-(2^n) of the root, so the index demand is
// logarithmic. The limit operator only ever queries p >= 4, which keeps
// this modulus sound down to radicands of 1/8 (the worst the head-digit
// cases can hand it): the n = ceil_log2(p) iterate at 1/8 still undercuts
// 2^-p for every p >= 4 even though the p < 4 bounds fail there.
inline Modulus log2_modulus() {
  return [](unsigned p) { return ceil_log2(p); };
}

// The Heron iterates of v as a lazily grown, shared sequence:
//   h(0) = 1,  h(n+1) = average(h(n), divide(v, h(n))).
// Each index is built once. Meaningful for val(v) > 0; divide enforces
// val(v) <= val(h(n)) and val(h(n)) >= 1/4, which hold for val(v) >= 1/16.
inline StreamSeq heron_iterates(const Stream& v) {
  struct Iterates {
    std::mutex m;
    Stream base;
    std::vector<Stream> built;
    explicit Iterates(Stream b) : base(std::move(b)) {}
  };
  auto its = std::make_shared<Iterates>(v);
  its->built.push_back(constant(Digit::pos));
  return [its](unsigned n) {
    std::lock_guard<std::mutex> lock(its->m);
    while (its->built.size() <= n) {
      const Stream& h = its->built.back();
      its->built.push_back(average(h, divide(its->base, h)));
    }
    return its->built[n];
  };
}

struct SqrtOptions {
  SeqShift shift = SeqShift::max;
  // How many leading zeros may be peeled off the root before giving up.
  // Streams converging to 0 too slowly to classify (e.g. val = 0 spelled
  // with infinitely many sign changes) would otherwise loop forever.
  unsigned max_peel_depth = 4096;
};

namespace detail {

// Square root by case analysis on up to three head digits. Writing the
// argument as d1 d2 d3 u:
//   -1 u            -> 0^w               (val <= 0, root is 0)
//    0 -1 u         -> 0^w               (val <= 0)
//    0  0 u         -> 0 : sqrt(u)       (sqrt(x/4)   = sqrt(x)/2)
//    0  1 -1 u      -> 0 : sqrt(1 u)     (sqrt(x/8+x'/8...) rescaled)
//    1 -1 -1 u      -> 0 : sqrt(1 u)
//   otherwise       -> Heron limit       (val >= 1/8 guaranteed)
// The two three-digit cases use val(0 1 -1 u) = val(1 -1 -1 u) =
// (2 + val(u)) / 8 = val(1 u) / 4, so one zero digit comes out and the
// argument advances to 1 u.
inline Stream sqrt_cases(const Stream& s, const Modulus& m,
                         const SqrtOptions& opts, unsigned peel_depth);

inline Stream sqrt_peeled(const Stream& arg, const Modulus& m,
                          const SqrtOptions& opts, unsigned peel_depth) {
  if (peel_depth >= opts.max_peel_depth)
    throw precondition_error(
        "sqrt: no digit after peeling " + std::to_string(peel_depth) +
        " zeros; radicand is 0 or converges to it too slowly");
  return cons(Digit::zero, [arg, m, opts, peel_depth] {
    return sqrt_cases(arg, m, opts, peel_depth);
  });
}

inline Stream sqrt_cases(const Stream& s, const Modulus& m,
                         const SqrtOptions& opts, unsigned peel_depth) {
  auto [d1, t1] = uncons(s);
  if (d1 == Digit::neg) return constant(Digit::zero);
  auto [d2, t2] = uncons(t1);
  if (d1 == Digit::zero) {
    if (d2 == Digit::neg) return constant(Digit::zero);
    if (d2 == Digit::zero) return sqrt_peeled(t2, m, opts, peel_depth + 1);
    auto [d3, t3] = uncons(t2);
    if (d3 == Digit::neg)
      return sqrt_peeled(cons(Digit::pos, t3), m, opts, peel_depth + 1);
  } else if (d2 == Digit::neg) {
    auto [d3, t3] = uncons(t2);
    if (d3 == Digit::neg)
      return sqrt_peeled(cons(Digit::pos, t3), m, opts, peel_depth + 1);
  }
  return limit(m, heron_iterates(s), opts.shift);
}

}  // namespace detail

// sqrt on [0, 1] with the identity modulus.
inline Stream sqrt_stream(const Stream& s, const SqrtOptions& opts = {}) {
  return detail::sqrt_cases(s, identity_modulus(), opts, 0);
}

// sqrt on [0, 1] with the logarithmic modulus: far fewer Heron iterates
// per digit. The head-digit cases rescale any radicand that reaches the
// Heron branch into [1/8, 1], where the quadratic convergence bound holds.
inline Stream sqrt_stream_fast(const Stream& s, const SqrtOptions& opts = {}) {
  return detail::sqrt_cases(s, log2_modulus(), opts, 0);
}

}  // namespace sdreal
