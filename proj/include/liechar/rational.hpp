#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liechar {

/// Exact rational; GMP keeps it reduced with a positive denominator.
using Rat = mpq_class;
using Integer = mpz_class;

/// `num/den`, denominator omitted when 1.
std::string to_string(const Rat& value);

/// Accepts `n`, `-n`, `n/d`. Throws Error(parse_syntax) on anything else or d = 0.
Rat parse_rat(std::string_view text);

}  // namespace liechar
