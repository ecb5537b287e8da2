#include "rainbowap/bignat.hpp"

#include <stdexcept>

namespace rainbowap {

BigNat nat_pow(std::uint64_t base, std::uint64_t exp) {
  BigNat result = 1;
  BigNat b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

BigNat binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

BigNat factorial(std::uint64_t n) {
  BigNat result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigNat falling_factorial(std::uint64_t r, std::uint64_t k) {
  if (k > r) return 0;
  BigNat result = 1;
  for (std::uint64_t i = 0; i < k; ++i) result *= r - i;
  return result;
}

std::string to_decimal(const BigNat& v) { return v.str(); }

BigNat parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal string: " + text);
  return BigNat(text);
}

double rat_to_double(const BigRat& v) { return v.convert_to<double>(); }

}  // namespace rainbowap
