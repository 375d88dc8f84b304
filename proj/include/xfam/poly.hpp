#pragma once

// Integer polynomials in one variable n, used to certify sign claims for all
// sufficiently large n rather than only on a finite window.

#include <string>
#include <utility>
#include <vector>

#include "xfam/exact.hpp"

namespace xfam {

class Poly {
 public:
  Poly() = default;
  Poly(Int constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(long long constant) : Poly(Int(constant)) {}           // NOLINT(google-explicit-constructor)

  /// a n + b
  static Poly linear(const Int& a, const Int& b) {
    Poly p;
    p.c_ = {b, a};
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(int d) const {
    static const Int zero = 0;
    return d >= 0 && d < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(d)] : zero;
  }
  const Int& leading() const { return coeff(degree()); }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  /// Coefficients of m -> P(x0 + m).
  Poly shifted(const Int& x0) const {
    Poly r = *this;
    const std::size_t d = r.c_.size();
    // Repeated synthetic division by (m - x0).
    for (std::size_t i = 0; i + 1 < d; ++i)
      for (std::size_t j = d - 1; j > i; --j) r.c_[j - 1] += x0 * r.c_[j];
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      const Int& a = coeff(d);
      if (a == 0) continue;
      if (!out.empty()) out += a < 0 ? " - " : " + ";
      else if (a < 0) out += "-";
      const Int mag = a < 0 ? Int(-a) : a;
      if (d == 0 || mag != 1) out += mag.str();
      if (d >= 1) out += "n";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;  // c_[d] multiplies n^d
};

struct TailCertificate {
  bool ok = false;
  long long shift_point = 0;  // P(shift_point + m) has nonnegative coefficients
  std::string detail;
};

/// Proves P(n) > 0 (or >= 0 when !strict) for every integer n >= start.
/// Integers in [start, M) are checked directly; the tail n >= M is covered by
/// the shifted polynomial P(M + m) having nonnegative coefficients (and a
/// positive constant term when strict).
inline TailCertificate certify_from(const Poly& p, long long start, bool strict = true, long long max_steps = 100000) {
  TailCertificate cert;
  if (p.is_zero()) {
    cert.ok = !strict;
    cert.shift_point = start;
    cert.detail = strict ? "zero polynomial" : "identically zero";
    return cert;
  }
  if (p.leading() < 0) {
    cert.detail = "leading coefficient negative: " + p.str();
    return cert;
  }
  for (long long m = start; m < start + max_steps; ++m) {
    const Poly q = p.shifted(m);
    bool nonneg = true;
    for (int d = 0; d <= q.degree(); ++d)
      if (q.coeff(d) < 0) nonneg = false;
    const Int& c0 = q.coeff(0);
    if (nonneg && (strict ? c0 > 0 : c0 >= 0)) {
      cert.ok = true;
      cert.shift_point = m;
      cert.detail = "P(" + std::to_string(m) + "+m) has nonnegative coefficients";
      return cert;
    }
    const Int v = c0;  // P(m)
    if (strict ? v <= 0 : v < 0) {
      cert.detail = "P(" + std::to_string(m) + ") = " + v.str() + " violates the sign";
      return cert;
    }
  }
  cert.detail = "no shift point found within " + std::to_string(max_steps) + " steps";
  return cert;
}

}  // namespace xfam
