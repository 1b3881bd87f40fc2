#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "stream.hpp"
#include "transforms.hpp"

namespace sdreal {

// M(p) = an index from which every sequence element is within 2^-p of the
// limit. Arguments are >= 1.
using Modulus = std::function<unsigned(unsigned)>;

using StreamSeq = std::function<Stream(unsigned)>;

// Where a stream's value provably lies after looking at <= 3 digits:
//   high: val >= 1/8, low: val <= -1/8, mid: |val| <= 1/4.
enum class Region { low, mid, high };

// Three-digit lookahead classification. The first two digits decide except
// for the ambiguous prefixes 1 -1, -1 1, 0 1, 0 -1, which need one more.
inline Region classify(const Stream& s) {
  auto [d1, t1] = uncons(s);
  auto [d2, t2] = uncons(t1);
  int a = digit_value(d1);
  int b = digit_value(d2);
  if (a == 1 && b >= 0) return Region::high;
  if (a == -1 && b <= 0) return Region::low;
  if (a == 0 && b == 0) return Region::mid;
  int c = digit_value(t2.head());
  if (a == 1) return c >= 0 ? Region::high : Region::mid;
  if (a == -1) return c <= 0 ? Region::low : Region::mid;
  if (b == 1) return c >= 0 ? Region::high : Region::mid;
  return c <= 0 ? Region::low : Region::mid;
}

// How the sequence index is pushed past M(4) when a digit is emitted.
enum class SeqShift { max, plus };

// Thread-safe caching wrapper; the underlying producer runs at most once
// per index.
inline StreamSeq memoize_seq(StreamSeq f) {
  struct Cache {
    std::mutex m;
    std::unordered_map<unsigned, Stream> entries;
    StreamSeq fn;
  };
  auto cache = std::make_shared<Cache>();
  cache->fn = std::move(f);
  return [cache](unsigned n) {
    std::lock_guard<std::mutex> lock(cache->m);
    auto it = cache->entries.find(n);
    if (it != cache->entries.end()) return it->second;
    Stream s = cache->fn(n);
    cache->entries.emplace(n, s);
    return s;
  };
}

// Limit of a convergent stream sequence, driven by its modulus: val of the
// result is lim val(f(n)) whenever |val(f(n)) - lim| <= 2^-p for all
// n >= m(p).
//
// Each digit step classifies f(m(4)), which is within 1/16 of the limit:
//   high: the limit is in [1/16, 1]; emit 1 and continue with the sequence
//         n |-> 2 * 2 * (f(shift(n)) / 2 - 1/4) converging to 2 lim - 1,
//   low:  mirror image, emit -1, shift by + 1/4,
//   mid:  the limit is in [-5/16, 5/16]; emit 0, continue with 2 * f(...).
// shift(n) pushes the index to max(m(4), n) or m(4) + n per seq_shift; the
// recursive modulus is p |-> m(p + 1), absorbing the factor 2.
inline Stream limit(Modulus m, StreamSeq f,
                    SeqShift seq_shift = SeqShift::max) {
  StreamSeq fm = memoize_seq(std::move(f));
  unsigned m4 = m(4);
  Region r = classify(fm(m4));
  Modulus next_m = [m = std::move(m)](unsigned p) { return m(p + 1); };
  auto shift = [m4, seq_shift](unsigned n) {
    return seq_shift == SeqShift::max ? std::max(m4, n) : m4 + n;
  };
  switch (r) {
    case Region::high: {
      StreamSeq g = [fm, shift](unsigned n) {
        return times_two(times_two(half_minus_quarter(fm(shift(n)))));
      };
      return cons(Digit::pos,
                  [next_m = std::move(next_m), g = std::move(g), seq_shift] {
                    return limit(next_m, g, seq_shift);
                  });
    }
    case Region::low: {
      StreamSeq g = [fm, shift](unsigned n) {
        return times_two(times_two(half_plus_quarter(fm(shift(n)))));
      };
      return cons(Digit::neg,
                  [next_m = std::move(next_m), g = std::move(g), seq_shift] {
                    return limit(next_m, g, seq_shift);
                  });
    }
    case Region::mid: {
      StreamSeq g = [fm, shift](unsigned n) {
        return times_two(fm(shift(n)));
      };
      return cons(Digit::zero,
                  [next_m = std::move(next_m), g = std::move(g), seq_shift] {
                    return limit(next_m, g, seq_shift);
                  });
    }
  }
  assert(false);
  return fm(m4);
}

}  // namespace sdreal
