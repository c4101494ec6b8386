#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jetvar {

/// Exact arbitrary-precision rational used for every symbolic coefficient.
using Rational = mpq_class;

/// Parses "12", "3/4" or a decimal literal such as "0.125" exactly.
Rational rational_from_string(std::string_view text);

/// The exact binary value of a finite double.
Rational rational_from_double(double value);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational factorial(unsigned n);

}  // namespace jetvar
