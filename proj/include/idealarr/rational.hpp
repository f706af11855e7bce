#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace idealarr {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Always "num/den", even when den == 1, so the output never depends on
// whether a value happens to be integral.
std::string to_fraction_string(const Rational& r);

// Human-oriented form: "3", "-1/2".
std::string to_display_string(const Rational& r);

}  // namespace idealarr
