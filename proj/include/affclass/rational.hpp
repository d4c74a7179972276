#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "affclass/errors.hpp"

namespace affclass {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) through arithmetic, so equality is plain value equality.
using Rat = mpq_class;

/// Column/coefficient vector over the rationals.
using Vec = std::vector<Rat>;

/// Build the canonical rational num/den. Throws BadParameter when den == 0.
Rat ratio(long num, long den = 1);

/// Parse "p" or "p/q" (optional leading '-', decimal digits, q > 0 after
/// canonicalization). Throws ParseError on malformed text or q == 0.
Rat rat_parse(const std::string& text);

/// Format as "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_str(const Rat& value);

/// Elementwise vector sum; throws DimensionMismatch on unequal lengths.
Vec vec_add(const Vec& a, const Vec& b);

/// Elementwise vector difference; throws DimensionMismatch on unequal lengths.
Vec vec_sub(const Vec& a, const Vec& b);

/// Scalar multiple of a vector.
Vec vec_scale(const Rat& c, const Vec& a);

/// Zero vector of the given length.
Vec vec_zero(std::size_t n);

/// True when every entry is zero.
bool vec_is_zero(const Vec& a);

/// Render a vector as "p/q" strings (used by the JSON layer and reports).
std::vector<std::string> vec_str(const Vec& a);

} // namespace affclass
