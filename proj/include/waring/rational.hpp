#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace waring {

/// Exact arbitrary-precision rational. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a" or "a/b" with an optional sign. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced fraction, e.g. "-1/3" or "2".
std::string to_string(const Rational& q);

/// Least common multiple of the denominators; 1 for an empty list.
Integer common_denominator(const std::vector<Rational>& values);

bool is_rational_square(const Rational& q, Rational* root = nullptr);

}  // namespace waring
