#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sbc {

/// Exact integer used for binomials, multiplicities and group orders.
using Integer = boost::multiprecision::cpp_int;

/// Bad caller input (out-of-range coordinates, weight mismatch, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource bound.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed (non-exact division, orthogonality break).
/// Seeing one of these means the model is wrong, not the input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr unsigned kDefaultLevelCap = 5;

/// Largest wreath level k (group P_{2^k}) the library will materialize.
/// Overridden by the SBC_LEVEL_CAP environment variable.
inline unsigned level_cap() {
  if (const char* env = std::getenv("SBC_LEVEL_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && v <= 8) return static_cast<unsigned>(v);
  }
  return kDefaultLevelCap;
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace sbc
