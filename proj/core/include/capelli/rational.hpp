#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace capelli {

/// Exact arbitrary-precision rational. Every coefficient in the library is one of these.
using Rational = mpq_class;

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// p/q in lowest terms. Throws std::invalid_argument if q == 0.
Rational ratio(long p, long q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace capelli
