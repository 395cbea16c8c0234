#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace slopekit {

using Rational = boost::rational<std::int64_t>;

/// "r/s", or a bare integer when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "r/s" or an integer; throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// p^k with overflow check.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

bool is_prime(std::uint64_t n);

}  // namespace slopekit
