#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rainbowap {

// All counts in this library are exact. Coloring counts reach r^n at tiny n,
// so they are arbitrary-precision naturals from the start; ratios of counts
// are exact rationals.
using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigNat nat_pow(std::uint64_t base, std::uint64_t exp);
BigNat binomial(std::uint64_t n, std::uint64_t k);
BigNat factorial(std::uint64_t n);
// r (r-1) ... (r-k+1); zero when k > r.
BigNat falling_factorial(std::uint64_t r, std::uint64_t k);

std::string to_decimal(const BigNat& v);
BigNat parse_decimal(const std::string& text);

// Decimal string with enough digits to round-trip; used for ratio display.
double rat_to_double(const BigRat& v);

}  // namespace rainbowap
