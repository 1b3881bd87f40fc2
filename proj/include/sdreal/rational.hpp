#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sdreal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 2^k as an exact rational, k may be negative.
inline Rat pow2(long k) {
  if (k >= 0) return Rat(Int(1) << k);
  return Rat(Int(1), Int(1) << -k);
}

// Accepts "p" or "p/q" with an optional leading sign on p; q must be a
// positive decimal literal.
inline Rat parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why) -> Rat {
    throw parse_error("invalid rational '" + std::string(text) + "': " + why);
  };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == num_begin) return fail("expected digits");
  Int num(std::string(text.substr(num_begin, i - num_begin)));
  if (negative) num = -num;

  if (i == text.size()) return Rat(num);

  if (text[i] != '/') return fail("unexpected character at position " +
                                  std::to_string(i));
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == den_begin || i != text.size())
    return fail("malformed denominator");
  Int den(std::string(text.substr(den_begin)));
  if (den == 0) return fail("denominator is zero");
  return Rat(num, den);
}

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace sdreal
