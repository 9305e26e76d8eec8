#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace ainf {

// Exact rational scalar. Arbitrary-precision, always canonical (lowest
// terms, positive denominator); every identity in this library is checked
// with zero tolerance.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Scalar parse_scalar(std::string_view text);

// "3", "-1/2", ... (canonical form, no "/1" suffix).
std::string format_scalar(const Scalar& s);

} // namespace ainf
