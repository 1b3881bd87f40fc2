#pragma once

#include <stdexcept>
#include <string>

namespace sdreal {

// One signed binary digit.
enum class Digit : signed char { neg = -1, zero = 0, pos = 1 };

constexpr int digit_value(Digit d) noexcept { return static_cast<int>(d); }

constexpr Digit negated(Digit d) noexcept {
  return static_cast<Digit>(-digit_value(d));
}

inline Digit digit_from_int(int v) {
  if (v < -1 || v > 1)
    throw std::domain_error("digit out of range: " + std::to_string(v));
  return static_cast<Digit>(v);
}

}  // namespace sdreal
