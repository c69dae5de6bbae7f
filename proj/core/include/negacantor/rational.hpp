#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace negacantor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "7", "-3/4", "22/7". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rat parse_rational(std::string_view text);

// "num/den", with the "/den" part omitted when the denominator is 1.
std::string fraction_string(const Rat& x);

// Decimal rendering with the given number of significant digits, rounded
// half away from zero. Uses plain positional notation for moderate
// exponents and e-notation otherwise. Pure integer arithmetic, so output
// is identical across platforms.
std::string decimal_string(const Rat& x, int significant);

double to_double(const Rat& x);

Int pow10(long k);

// Largest integer <= x.
Int floor_rat(const Rat& x);

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace negacantor
