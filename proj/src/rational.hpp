#ifndef DRD_RATIONAL_HPP
#define DRD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace drd {

// Exact fractions throughout; nothing in the engine ever rounds.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// "num/den" in lowest terms, plain "num" when den == 1.
std::string to_string(const Rational& r);

Rational rational_from_string(const std::string& text);

// Decimal rendering with `digits` digits after the point, truncated toward
// zero. Supplementary output only; exact strings are always emitted too.
std::string to_decimal(const Rational& r, int digits);

}  // namespace drd

#endif
