#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace glrect {

/// Exact signed integer of unbounded size.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

}  // namespace glrect
