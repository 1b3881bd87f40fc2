#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "digit.hpp"

namespace sdreal {

// An infinite signed-digit stream denoting a real number in [-1, 1]:
//
//   val(d1 d2 d3 ...) = sum_{i >= 1} d_i * 2^-i,
//
// equivalently val(cons(d, s)) = (d + val(s)) / 2.
//
// A stream is a shared handle to an immutable cons cell: a strict head digit
// plus a deferred tail. Forcing a tail is memoized and idempotent, also under
// concurrent forcing, so any digit's producer runs at most once and repeated
// prefix reads cost O(1) per digit.
class Stream {
 public:
  using Thunk = std::function<Stream()>;

  static Stream cons(Digit d, Stream tail);
  static Stream cons(Digit d, Thunk tail);
  static Stream constant(Digit d);

  Digit head() const;
  Stream tail() const;

 private:
  struct Cell;
  using CellPtr = std::shared_ptr<const Cell>;

  explicit Stream(CellPtr cell) : cell_(std::move(cell)) {}

  CellPtr cell_;
};

struct Stream::Cell {
  Digit head;
  mutable std::once_flag once;
  mutable Thunk thunk;
  mutable CellPtr next;

  Cell(Digit d, CellPtr n) : head(d), next(std::move(n)) {}
  Cell(Digit d, Thunk t) : head(d), thunk(std::move(t)) {}

  // Release a memoized chain iteratively; recursive shared_ptr teardown
  // overflows the stack once prefixes run thousands of digits deep.
  ~Cell() {
    CellPtr cur = std::move(next);
    while (cur && cur.use_count() == 1) {
      CellPtr following = std::move(cur->next);
      cur = std::move(following);
    }
  }
};

inline Stream Stream::cons(Digit d, Stream tail) {
  return Stream(std::make_shared<const Cell>(d, std::move(tail.cell_)));
}

inline Stream Stream::cons(Digit d, Thunk tail) {
  return Stream(std::make_shared<const Cell>(d, std::move(tail)));
}

// The constant stream d d d ..., with val = d. One immortal self-cyclic
// cell per digit; never freed.
inline Stream Stream::constant(Digit d) {
  static const std::array<Stream, 3>& cells = *[] {
    auto self_loop = [](Digit dd) {
      auto cell = std::make_shared<const Cell>(dd, Thunk(nullptr));
      cell->next = cell;
      return Stream(cell);
    };
    return new std::array<Stream, 3>{self_loop(Digit::neg),
                                     self_loop(Digit::zero),
                                     self_loop(Digit::pos)};
  }();
  return cells[static_cast<std::size_t>(digit_value(d) + 1)];
}

inline Digit Stream::head() const { return cell_->head; }

inline Stream Stream::tail() const {
  const Cell& c = *cell_;
  std::call_once(c.once, [&c] {
    if (!c.next) {
      Stream t = c.thunk();
      c.next = std::move(t.cell_);
      c.thunk = nullptr;
    }
  });
  return Stream(c.next);
}

inline Stream cons(Digit d, Stream tail) {
  return Stream::cons(d, std::move(tail));
}

inline Stream cons(Digit d, Stream::Thunk tail) {
  return Stream::cons(d, std::move(tail));
}

inline Stream constant(Digit d) { return Stream::constant(d); }

inline std::pair<Digit, Stream> uncons(const Stream& s) {
  return {s.head(), s.tail()};
}

// First n digits; materializes exactly the first n cells.
inline std::vector<Digit> prefix(const Stream& s, std::size_t n) {
  std::vector<Digit> out;
  out.reserve(n);
  Stream cur = s;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(cur.head());
    if (i + 1 < n) cur = cur.tail();
  }
  return out;
}

}  // namespace sdreal
