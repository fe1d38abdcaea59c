#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace covercount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegralGenus : Error {
  using Error::Error;
};
struct NegativeGenus : Error {
  using Error::Error;
};
struct CongruenceViolated : Error {
  using Error::Error;
};
struct HypothesesNotMet : Error {
  using Error::Error;
};
struct InvalidSpec : Error {
  using Error::Error;
};
struct ZeroInput : Error {
  using Error::Error;
};
struct PrecisionExhausted : Error {
  using Error::Error;
};
struct TrackingBudgetExceeded : Error {
  using Error::Error;
};

inline BigInt factorial(long n) {
  if (n < 0) throw Error("factorial: negative argument");
  BigInt acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// C(n, k) over arbitrary-precision integers; 0 when k < 0 or k > n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;  // exact: acc is C(n-k+i, i) after this step
  }
  return acc;
}

inline BigInt pow_bigint(const BigInt& base, long exp) {
  BigInt acc = 1, b = base;
  for (long e = exp; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    if (e > 1) b *= b;
  }
  return acc;
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Complex to_complex(const Rational& q) { return Complex(to_double(q), 0.0); }

/// FNV-1a 64-bit hash, used for stable content hashes in reports.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace covercount
