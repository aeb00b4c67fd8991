#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural log of |x|; -inf for zero. Safe for values far beyond double range.
inline double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  BigInt a = boost::multiprecision::abs(x);
  const auto bits = boost::multiprecision::msb(a);
  if (bits < 1000) return std::log(a.convert_to<double>());
  const auto shift = bits - 900;
  a >>= shift;
  return std::log(a.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Polynomial binomial coefficient x(x-1)...(x-k+1)/k! for any integer x.
inline BigInt binomial(std::int64_t top, unsigned k) {
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= BigInt(top - static_cast<std::int64_t>(i));
  return num / factorial(k);
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace crank
