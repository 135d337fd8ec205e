#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace maxclass {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms with q > 0, or the bare integer when q == 1.
std::string to_string(const Rational& value);

/// Inverse of to_string; accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

} // namespace maxclass
