#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cnet {

using Rational = mpq_class;

/// Parses "7", "-2.25", "3/5" (also "+3/5"). Throws StructuralError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Rational& value);

}  // namespace cnet
