#pragma once

#include <gmpxx.h>

#include <string>

namespace cohfm {

/// Exact rational scalar used everywhere in the engine. No floating point
/// enters any computation. Values are kept canonical (denominator > 0,
/// gcd(num, den) = 1); construct through rat() so canonicalization never
/// gets skipped.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

bool rat_is_integer(const Rat& r);

// Largest integer <= r, as a rational.
Rat rat_floor(const Rat& r);

// Throws Error unless r is an integer that fits in long.
long rat_to_long(const Rat& r);

// Canonical text form: "p/q" with q > 0, plain "p" for integers.
std::string rat_str(const Rat& r);

// Parses a single rational literal ("7", "-3/4"). Throws ParseError.
Rat rat_parse(const std::string& text);

}  // namespace cohfm
