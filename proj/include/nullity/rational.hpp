#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nullity {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline BigRational rational_pow(const BigRational& base, std::uint64_t exp) {
  return BigRational(big_pow(boost::multiprecision::numerator(base), exp),
                     big_pow(boost::multiprecision::denominator(base), exp));
}

/// "num/den" in lowest terms.
inline std::string to_string(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Parses "a/b" or "a"; throws Error(parse) on junk or a zero denominator.
BigRational parse_rational(const std::string& text);

/// Decimal rendering with at most `digits` significant digits, for display only.
std::string to_decimal(const BigRational& r, int digits = 6);

}  // namespace nullity
