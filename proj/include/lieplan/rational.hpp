#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieplan {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

int sign(const Rational& r);

Rational abs_value(const Rational& r);

/// True iff r is the square of a rational; writes the nonnegative root.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace lieplan
