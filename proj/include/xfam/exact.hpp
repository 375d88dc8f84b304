#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals, plus the
// binomial coefficient every other module evaluates through.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xfam {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an argument lies outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown when a documented precondition does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// C(n, k), exact. Zero outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
  if (n < 0) throw DomainError("binomial: negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  // After step j, r = C(n-k+j, j), so every division is exact.
  for (long long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& q) {
  const Int den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

/// Fixed-point rendering for display only; never used in a comparison.
inline std::string to_decimal(const Rat& q, int digits = 6) {
  Int num = numerator_of(q);
  const Int den = denominator_of(q);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Int scaled = (num * scale + den / 2) / den;
  std::string frac = Int(scaled % scale).str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  return sign + Int(scaled / scale).str() + "." + frac;
}

/// Smallest integer n with n >= 3.38 * m (exact: 100 n >= 338 m).
inline long long threshold_n(long long m) { return (338 * m + 99) / 100; }

/// True when the integer n satisfies n >= 3.38 * m exactly.
inline bool meets_threshold(long long n, long long m) { return 100 * n >= 338 * m; }

}  // namespace xfam
