#pragma once

#include <gmpxx.h>

#include <string>

#include "skewsmash/errors.hpp"

namespace skewsmash {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator), which the rest of the library relies on for equality tests.
using Rational = mpq_class;

inline Rational rational_from_long(long v) { return Rational(v); }

// Accepts "n" or "n/d" with optional sign, e.g. "-3/4".
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw config_error("not a rational literal: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw config_error("zero denominator in rational literal: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool rational_is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace skewsmash
