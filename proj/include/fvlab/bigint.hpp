#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fvlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an input violates a documented precondition or type invariant.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed its configured size limits.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strict decimal parse: optional leading '-', then one or more digits.
BigInt parse_bigint(std::string_view text);

/// Decimal rational "p/q" or "p" or a finite decimal "12.50".
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Number of bits in |value|; 0 for value == 0.
std::size_t bit_length(const BigInt& value);

/// ceil(log2(value)) for value >= 1, and 0 for value <= 1.
std::size_t ceil_log2(const BigInt& value);

/// Largest r with r^k <= value, for value >= 0 and k >= 1.
BigInt integer_root(const BigInt& value, unsigned k);

double to_double(const Rational& value);

}  // namespace fvlab
