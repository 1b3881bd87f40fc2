#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "stream.hpp"

namespace sdreal {

// Space-separated digit tokens "+1", "0", "-1"; empty string for no digits.
inline std::string format_digits(const std::vector<Digit>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ' ';
    switch (digits[i]) {
      case Digit::neg:
        out += "-1";
        break;
      case Digit::zero:
        out += '0';
        break;
      case Digit::pos:
        out += "+1";
        break;
    }
  }
  return out;
}

// Inverse of format_digits; also accepts "1" for "+1". Unknown tokens are
// reported with their text and position.
inline std::vector<Digit> parse_digits(std::string_view text) {
  std::vector<Digit> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok == "-1")
      out.push_back(Digit::neg);
    else if (tok == "0")
      out.push_back(Digit::zero);
    else if (tok == "+1" || tok == "1")
      out.push_back(Digit::pos);
    else
      throw parse_error("invalid digit token '" + std::string(tok) +
                        "' at position " + std::to_string(start));
  }
  return out;
}

namespace detail {

// Decimal digits needed to write 2^p, i.e. floor(p log10 2) + 1.
inline unsigned decimal_places(unsigned p) {
  Int shifted = Int(1) << p;
  return static_cast<unsigned>(shifted.str().size());
}

// q rounded to `places` decimal places, half away from zero.
inline std::string decimal_string(const Rat& q, unsigned places) {
  Int ten_k = 1;
  for (unsigned i = 0; i < places; ++i) ten_k *= 10;
  Int num = numerator(q) * ten_k;
  Int den = denominator(q);
  Int t = num / den;
  Int rem = num % den;
  if (2 * abs(rem) >= den) t += num < 0 ? -1 : 1;
  std::string sign = t < 0 ? "-" : "";
  Int at = abs(t);
  Int whole = at / ten_k;
  Int part = at % ten_k;
  std::string frac = part.str();
  frac.insert(frac.begin(), places - frac.size(), '0');
  return sign + whole.str() + "." + frac;
}

}  // namespace detail

// A human-readable approximation honest to the stated radius: the first
// p + 2 digits are evaluated exactly and rounded to just enough decimal
// places that rounding error plus truncation stay within 2^-p.
inline std::string decimal_approx(const Stream& s, unsigned p) {
  Rat pv = prefix_value(s, p + 2);
  unsigned places = detail::decimal_places(p);
  return detail::decimal_string(pv, places) + " ± 2^-" + std::to_string(p);
}

}  // namespace sdreal
