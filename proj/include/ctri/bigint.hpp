#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses a base-10 integer with optional leading '-'; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

BigInt factorial(int n);

}  // namespace ctri
