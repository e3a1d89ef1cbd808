#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "bspin/errors.hpp"

namespace bspin {

// All exact arithmetic runs on arbitrary-precision integers and rationals;
// nothing in the exact paths is allowed to wrap or round.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact product lo * (lo+1) * ... * hi, by binary splitting so the factors
/// stay balanced in size.
inline BigInt product_range(long long lo, long long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    BigInt r = lo;
    for (long long i = lo + 1; i <= hi; ++i) r *= i;
    return r;
  }
  const long long mid = lo + (hi - lo) / 2;
  return product_range(lo, mid) * product_range(mid + 1, hi);
}

/// Exact k!.
inline BigInt factorial(long long k) {
  if (k < 0) throw ValidationError("factorial: negative argument");
  return product_range(2, k);
}

/// Exact x^e for rational x != 0 and any integer e.
inline BigRat rat_pow(const BigRat& x, long long e) {
  if (x == 0) {
    if (e <= 0) throw ValidationError("rat_pow: zero base with non-positive exponent");
    return BigRat(0);
  }
  BigRat base = e < 0 ? BigRat(1) / x : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                               : static_cast<unsigned long long>(e);
  BigRat r = 1;
  while (k > 0) {
    if (k & 1ull) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

/// Natural log of a positive big integer.
inline double log_value(const BigInt& x) {
  if (x <= 0) throw ValidationError("log_value: non-positive argument");
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 62) return std::log(x.convert_to<double>());
  // Take the top 62 bits as the mantissa and account for the shift.
  const unsigned shift = bits - 62;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2_v<double>;
}

/// Natural log of a positive rational.
inline double log_value(const BigRat& x) {
  if (x <= 0) throw ValidationError("log_value: non-positive argument");
  return log_value(numerator(x)) - log_value(denominator(x));
}

/// Round-to-nearest double, safe for rationals whose parts overflow double.
inline double to_double(const BigRat& x) {
  using Float50 = boost::multiprecision::cpp_bin_float_50;
  return Float50(x).convert_to<double>();
}

}  // namespace bspin
