#pragma once

#include <stdexcept>
#include <string>

namespace sdreal {

// Input text that does not match the expected grammar (digit tokens,
// rational literals).
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// A semantic contract was violated badly enough to be detected at runtime,
// e.g. division whose denominator refuses to separate from zero.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdreal
