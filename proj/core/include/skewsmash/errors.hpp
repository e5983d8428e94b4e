#pragma once

#include <stdexcept>
#include <string>

namespace skewsmash {

// Raised for invalid inputs that a caller could have validated up front
// (bad config values, mismatched fields, out-of-range indices).
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation cannot proceed (division by zero, no rational
// function reconstruction, resource guard tripped).
class math_error : public std::runtime_error {
public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace skewsmash
