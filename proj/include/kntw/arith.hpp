#pragma once

// Exact integer and rational arithmetic shared by every formula in the library.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kntw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k). Returns 0 when k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as a machine word; throws ResourceError if it does not fit.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

/// Parses "num/den" or a bare integer. Decimal points are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

}  // namespace kntw
