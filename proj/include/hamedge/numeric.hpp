#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hamedge {

// Exact scalars used throughout the combinatorial core. Betti numbers and
// weight-lattice coordinates are arbitrary-precision integers; moment-map
// data are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", integer, or decimal tokens ("4.5" -> 9/2) into an exact
// rational. Decimal strings are scaled by a power of ten, never routed
// through binary floating point. Throws DomainError on malformed input.
Rat parse_rational(const std::string& token);

// Splits a comma-separated list of rational tokens.
std::vector<Rat> parse_rational_list(const std::string& csv);

// "p/q" when the denominator is not 1, plain integer otherwise.
std::string format_rational(const Rat& r);

double to_double(const Rat& r);

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace hamedge
