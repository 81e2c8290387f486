#pragma once

#include <gmpxx.h>

#include <string>

namespace tnn {

// All arithmetic in the library is exact. Coefficients, matrix entries and
// certificate sums are arbitrary-precision rationals; there is no floating
// point anywhere in the decision path.
using Integer = mpz_class;
using Rational = mpq_class;

namespace rat {

/// num/den in lowest terms; throws std::invalid_argument when den == 0.
Rational make(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws on malformed
/// input or zero denominator.
Rational parse(const std::string& text);

/// Lowest-terms decimal form, "p" or "p/q" with q > 1.
std::string to_string(const Rational& value);

}  // namespace rat
}  // namespace tnn
