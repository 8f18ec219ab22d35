#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagcert {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign on p). The result is in lowest terms.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0 and gcd(p, q) = 1, e.g. "0/1", "-5/7".
std::string format_rational(const Rational& r);

}  // namespace flagcert
