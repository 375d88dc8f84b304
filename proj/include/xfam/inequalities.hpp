#pragma once

// Exact-rational evaluation and grid verification of the ratio inequalities
// behind the product bound for cross-2-intersecting families.
//
// Every comparison here is done in Int/Rat; decimal strings are display only.
// Finite n-windows are complemented by polynomial tail certificates (see
// poly.hpp) so that a passing sweep covers every integer n beyond the window.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "xfam/exact.hpp"
#include "xfam/poly.hpp"

namespace xfam {

// ---------------------------------------------------------------------------
// f(n, k, s, i)

namespace detail {

inline Int nonzero_factor(Int v, const char* name) {
  if (v == 0) throw DomainError(std::string("zero denominator factor ") + name);
  return v;
}

inline Int positive_factor(Int v, const char* name) {
  if (v <= 0) throw DomainError(std::string("nonpositive denominator factor ") + name + " = " + v.str());
  return v;
}

}  // namespace detail

/// (k-i+1)(s(n-s+1) - i(k-i)) / ((n-s+1)(i(n+2i-2k-2s) + s(k+1)))
inline Rat f_value(long long n, long long k, long long s, long long i) {
  const Int num = Int(k - i + 1) * (Int(s) * (n - s + 1) - Int(i) * (k - i));
  const Int d1 = detail::nonzero_factor(Int(n - s + 1), "(n-s+1)");
  const Int d2 = detail::nonzero_factor(Int(i) * (n + 2 * i - 2 * k - 2 * s) + Int(s) * (k + 1),
                                        "i(n+2i-2k-2s)+s(k+1)");
  return Rat(num) / Rat(d1 * d2);
}

/// The same quantity as a ratio of binomial sums:
/// [C(s-1,i-1)C(n-s,k-i) + C(s-1,i)C(n-s+1,k-i)] / [C(s-1,i-1)C(n-s+1,k-i+1) + C(s-1,i)C(n-s+1,k-i)]
inline Rat f_value_binomial(long long n, long long k, long long s, long long i) {
  const Int num = binomial(s - 1, i - 1) * binomial(n - s, k - i) + binomial(s - 1, i) * binomial(n - s + 1, k - i);
  const Int den =
      binomial(s - 1, i - 1) * binomial(n - s + 1, k - i + 1) + binomial(s - 1, i) * binomial(n - s + 1, k - i);
  return Rat(num) / Rat(detail::nonzero_factor(den, "binomial denominator"));
}

// ---------------------------------------------------------------------------
// Single-factor inequality: f(n,k,s,i) > C(n-s,k-i)/C(n-s,k-i+1) for s >= k+1.

inline bool lemma31_admissible(long long n, long long k, long long s, long long i) {
  return meets_threshold(n, k) && s >= k + 1 && i >= std::max(s + 2 - k, 3LL) && i <= std::min(s - 1, k);
}

/// (n-s+1)(s-i)(n-2k-s+2i-1) - i(n-s-k+i+1)(k-i+1)
inline Int lemma31_polynomial_value(long long n, long long k, long long s, long long i) {
  return Int(n - s + 1) * (s - i) * (n - 2 * k - s + 2 * i - 1) - Int(i) * (n - s - k + i + 1) * (k - i + 1);
}

inline Poly lemma31_polynomial(long long k, long long s, long long i) {
  return Poly::linear(1, 1 - s) * Poly(s - i) * Poly::linear(1, -2 * k - s + 2 * i - 1) -
         Poly(i * (k - i + 1)) * Poly::linear(1, -s - k + i + 1);
}

struct Lemma31Result {
  Rat f;              // f(n,k,s,i)
  Rat ratio;          // C(n-s,k-i)/C(n-s,k-i+1)
  Int polynomial;     // the cleared-denominator form
  bool direct = false;
  bool cleared = false;
  bool agree() const { return direct == cleared; }
  bool holds() const { return direct && cleared; }
  Rat slack() const { return f - ratio; }
};

inline Lemma31Result lemma31_check(long long n, long long k, long long s, long long i) {
  if (!lemma31_admissible(n, k, s, i))
    throw PreconditionError("lemma31_check: inadmissible point (n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " s=" + std::to_string(s) + " i=" + std::to_string(i) + ")");
  Lemma31Result r;
  r.f = f_value(n, k, s, i);
  r.ratio = Rat(binomial(n - s, k - i)) / Rat(detail::nonzero_factor(binomial(n - s, k - i + 1), "C(n-s,k-i+1)"));
  r.polynomial = lemma31_polynomial_value(n, k, s, i);
  r.direct = r.f > r.ratio;
  r.cleared = r.polynomial > 0;
  return r;
}

// ---------------------------------------------------------------------------
// Product inequality f(n,k,s,i) f(n,l,s,s+2-i) > C(n-s,k-i)C(n-s,l+i-s-2) / (C(n-s,k-i+1)C(n-s,l+i-s-1))
// and its cleared form T(n,s,k,l,i) > 1.

inline bool is_exception_point(long long s, long long i) {
  return (s == 4 && i == 3) || (s == 5 && i == 3) || (s == 5 && i == 4) || (s == 6 && i == 4);
}

inline bool lemma32_admissible(long long n, long long k, long long l, long long s, long long i) {
  return meets_threshold(n, std::max(k, l)) && s <= k + l - 2 && i >= std::max(s + 2 - l, 3LL) &&
         i <= std::min(k, s - 1);
}

struct TFactors {
  Poly x1, x2, y1, y2;  // numerator
  Poly d1, d2, d3;      // denominator is d1 d2 d3^2
};

inline TFactors t_factors(long long s, long long k, long long l, long long i) {
  TFactors f;
  f.x1 = Poly::linear(s, s * (1 - s) - i * (k - i));
  f.x2 = Poly::linear(s, s * (1 - s) - (s - i + 2) * (l + i - s - 2));
  f.y1 = Poly::linear(1, -s - k + i);
  f.y2 = Poly::linear(1, -l - i + 2);
  f.d1 = Poly::linear(i, i * (-2 * k - s + 2 * i) + s * (k - i + 1));
  f.d2 = Poly::linear(s - i + 2, (s - i + 2) * (-2 * l - 2 * i + s + 4) + s * (l + i - s - 1));
  f.d3 = Poly::linear(1, 1 - s);
  return f;
}

/// Exact T(n,s,k,l,i); throws when a denominator factor is not positive.
inline Rat T_value(long long n, long long s, long long k, long long l, long long i) {
  const TFactors f = t_factors(s, k, l, i);
  const Int x = Int(n);
  const Int d1 = detail::positive_factor(f.d1(x), "i(n-2k-s+2i)+s(k-i+1)");
  const Int d2 = detail::positive_factor(f.d2(x), "(s-i+2)(n-2l-2i+s+4)+s(l+i-s-1)");
  const Int d3 = detail::positive_factor(f.d3(x), "(n-s+1)");
  const Int num = f.x1(x) * f.x2(x) * f.y1(x) * f.y2(x);
  return Rat(num) / Rat(d1 * d2 * d3 * d3);
}

struct ProductInequality {
  Rat lhs;
  Rat rhs;
  bool holds() const { return lhs > rhs; }
  Rat ratio() const { return lhs / rhs; }
};

/// Direct evaluation from the binomial forms (independent of T).
inline ProductInequality product_inequality(long long n, long long k, long long l, long long s, long long i) {
  ProductInequality r;
  r.lhs = f_value_binomial(n, k, s, i) * f_value_binomial(n, l, s, s + 2 - i);
  const Int num = binomial(n - s, k - i) * binomial(n - s, l + i - s - 2);
  const Int den = binomial(n - s, k - i + 1) * binomial(n - s, l + i - s - 1);
  r.rhs = Rat(num) / Rat(detail::nonzero_factor(den, "C(n-s,k-i+1)C(n-s,l+i-s-1)"));
  return r;
}

// ---------------------------------------------------------------------------
// Reports

struct SweepRow {
  std::string check;
  std::optional<long long> n, k, l, s, i;
  std::optional<Rat> value;
  bool pass = false;
  bool asserted = true;  // false: outcome recorded, not part of the verdict
};

struct SweepReport {
  std::string name;
  std::string grid;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t recorded = 0;
  std::vector<SweepRow> rows;
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }

  void add(SweepRow row) {
    if (!row.asserted) ++recorded;
    else if (row.pass) ++passed;
    else ++failed;
    rows.push_back(std::move(row));
  }

  std::vector<SweepRow> failures() const {
    std::vector<SweepRow> out;
    for (const auto& r : rows)
      if (r.asserted && !r.pass) out.push_back(r);
    return out;
  }
};

inline void write_csv(std::ostream& os, const SweepReport& rep) {
  auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); };
  os << "check,n,k,l,s,i,value_num,value_den,pass\n";
  for (const auto& r : rep.rows) {
    os << r.check << ',' << opt(r.n) << ',' << opt(r.k) << ',' << opt(r.l) << ',' << opt(r.s) << ',' << opt(r.i) << ',';
    if (r.value) os << numerator_of(*r.value) << ',' << denominator_of(*r.value);
    else os << ',';
    os << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

inline void write_summary(std::ostream& os, const SweepReport& rep) {
  os << rep.name << " [" << rep.grid << "]: " << (rep.ok() ? "PASS" : "FAIL") << " passed=" << rep.passed
     << " failed=" << rep.failed << " recorded=" << rep.recorded << '\n';
  for (const auto& note : rep.notes) os << "  " << note << '\n';
}

struct Grid {
  long long kmin = 3;
  long long kmax = 10;
  long long lmin = 3;
  long long lmax = 10;
  long long nwindow = 20;  // n ranges over [n0, n0 + nwindow]
};

namespace detail {

inline void add_tail(SweepReport& rep, const std::string& check, const Poly& p, long long start, long long k,
                     long long l, long long s, long long i, bool strict, bool asserted) {
  const TailCertificate c = certify_from(p, start, strict);
  SweepRow row{"tail:" + check, c.shift_point, k, l, s, i, std::nullopt, c.ok, asserted};
  if (!c.ok) rep.notes.push_back("tail " + check + " (k=" + std::to_string(k) + " l=" + std::to_string(l) + " s=" +
                                 std::to_string(s) + " i=" + std::to_string(i) + "): " + c.detail);
  rep.add(std::move(row));
}

}  // namespace detail

/// Single-factor sweep over k in [kmin, kmax], k+1 <= s <= 2k-1, admissible i,
/// n in [ceil(3.38k), ceil(3.38k) + nwindow], plus tail certificates.
inline SweepReport lemma31_sweep(const Grid& g) {
  SweepReport rep;
  rep.name = "sweep-f";
  rep.grid = "k=" + std::to_string(g.kmin) + ".." + std::to_string(g.kmax) + " nwindow=" + std::to_string(g.nwindow);
  std::optional<Rat> min_slack;
  std::string min_at;
  std::size_t disagreements = 0;
  for (long long k = g.kmin; k <= g.kmax; ++k) {
    const long long n0 = threshold_n(k);
    for (long long s = k + 1; s <= 2 * k - 1; ++s)
      for (long long i = std::max(s + 2 - k, 3LL); i <= std::min(s - 1, k); ++i) {
        for (long long n = n0; n <= n0 + g.nwindow; ++n) {
          const Lemma31Result r = lemma31_check(n, k, s, i);
          const bool dual = f_value(n, k, s, i) == f_value_binomial(n, k, s, i);
          if (!r.agree()) ++disagreements;
          rep.add({"lemma31", n, k, std::nullopt, s, i, r.f, r.holds() && r.agree() && dual, true});
          if (!min_slack || r.slack() < *min_slack) {
            min_slack = r.slack();
            min_at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                     " i=" + std::to_string(i);
          }
        }
        // Beyond the window: the cleared polynomial and the denominators it was
        // cleared by stay positive.
        const long long tail = n0 + g.nwindow + 1;
        detail::add_tail(rep, "lemma31-poly", lemma31_polynomial(k, s, i), tail, k, 0, s, i, true, true);
        detail::add_tail(rep, "lemma31-den", Poly::linear(i, i * (-s - k + i + 1)), tail, k, 0, s, i, true, true);
        detail::add_tail(rep, "lemma31-ratio-den", Poly::linear(1, i - k - s), tail, k, 0, s, i, true, true);
      }
  }
  rep.notes.push_back("route disagreements (direct ratio vs cleared polynomial): " + std::to_string(disagreements));
  if (min_slack)
    rep.notes.push_back("minimum slack f - ratio = " + to_string(*min_slack) + " (~" + to_decimal(*min_slack) + ") at " +
                        min_at);
  return rep;
}

/// Product sweep over k, l in the grid, 4 <= s <= k+l-2, admissible i, and the
/// n-window above ceil(3.38 max(k,l)). Non-exception points are asserted; the
/// four exception points are recorded only.
inline SweepReport lemma32_sweep(const Grid& g) {
  SweepReport rep;
  rep.name = "sweep-T";
  rep.grid = "k=" + std::to_string(g.kmin) + ".." + std::to_string(g.kmax) + " l=" + std::to_string(g.lmin) + ".." +
             std::to_string(g.lmax) + " nwindow=" + std::to_string(g.nwindow);
  std::size_t route_mismatch = 0, t_unavailable = 0, branch_checked = 0, branch_skipped = 0;
  std::size_t exc_hold = 0, exc_violate = 0;
  std::vector<std::string> exc_examples;
  for (long long k = g.kmin; k <= g.kmax; ++k)
    for (long long l = g.lmin; l <= g.lmax; ++l) {
      const long long n0 = threshold_n(std::max(k, l));
      for (long long s = 4; s <= k + l - 2; ++s)
        for (long long i = std::max(s + 2 - l, 3LL); i <= std::min(k, s - 1); ++i) {
          const bool exception = is_exception_point(s, i);
          for (long long n = n0; n <= n0 + g.nwindow; ++n) {
            const ProductInequality direct = product_inequality(n, k, l, s, i);
            bool agree = true;
            try {
              const Rat t = T_value(n, s, k, l, i);
              agree = (t > 1) == direct.holds() && t == direct.ratio();
            } catch (const DomainError&) {
              ++t_unavailable;
            }
            if (!agree) ++route_mismatch;
            if (exception) {
              rep.add({"exception", n, k, l, s, i, direct.ratio(), direct.holds(), false});
              if (direct.holds()) ++exc_hold;
              else {
                ++exc_violate;
                if (exc_examples.size() < 5)
                  exc_examples.push_back("(n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" +
                                         std::to_string(l) + " s=" + std::to_string(s) + " i=" + std::to_string(i) +
                                         " ratio=" + to_decimal(direct.ratio()) + ")");
              }
              continue;
            }
            rep.add({"inq-main", n, k, l, s, i, direct.ratio(), direct.holds() && agree, true});
            if (s > std::max(k, l)) {
              // Both factors individually satisfy the single-factor inequality
              // whenever its hypotheses hold for each of them.
              const long long i2 = s + 2 - i;
              if (lemma31_admissible(n, k, s, i) && lemma31_admissible(n, l, s, i2)) {
                ++branch_checked;
                const bool ok = lemma31_check(n, k, s, i).holds() && lemma31_check(n, l, s, i2).holds();
                rep.add({"s>max-branch", n, k, l, s, i, std::nullopt, ok, true});
              } else {
                ++branch_skipped;
              }
            }
          }
          const long long tail = n0 + g.nwindow + 1;
          const TFactors f = t_factors(s, k, l, i);
          const Poly gap = f.x1 * f.x2 * f.y1 * f.y2 - f.d1 * f.d2 * f.d3 * f.d3;
          const bool assert_tail = !exception;
          detail::add_tail(rep, "T-gap", gap, tail, k, l, s, i, true, assert_tail);
          detail::add_tail(rep, "T-d1", f.d1, tail, k, l, s, i, true, assert_tail);
          detail::add_tail(rep, "T-d2", f.d2, tail, k, l, s, i, true, assert_tail);
          detail::add_tail(rep, "T-d3", f.d3, tail, k, l, s, i, true, assert_tail);
          detail::add_tail(rep, "T-y1", f.y1, tail, k, l, s, i, true, assert_tail);
          detail::add_tail(rep, "T-y2", f.y2, tail, k, l, s, i, true, assert_tail);
        }
    }
  rep.notes.push_back("route mismatches (direct vs T): " + std::to_string(route_mismatch) +
                      "; points where T has a nonpositive denominator factor: " + std::to_string(t_unavailable));
  rep.notes.push_back("s > max(k,l) points also covered factor-wise: " + std::to_string(branch_checked) +
                      " (single-factor hypotheses unmet at " + std::to_string(branch_skipped) + ")");
  std::string hunt = "exception hunt (s,i) in {(4,3),(5,3),(5,4),(6,4)}: holds at " + std::to_string(exc_hold) +
                     " points, violated at " + std::to_string(exc_violate);
  for (const auto& e : exc_examples) hunt += " " + e;
  rep.notes.push_back(hunt);
  return rep;
}

// ---------------------------------------------------------------------------
// Ratio constants at the threshold n.

struct RatioConstant {
  const char* name;
  int top_shift;   // C(n - top_shift, m - bottom_shift) / C(n-2, m-2)
  int bottom_shift;
  Rat bound;
};

inline const std::vector<RatioConstant>& ratio_constants() {
  static const std::vector<RatioConstant> table = {
      {"C(n-3,k-3)/C(n-2,k-2)<3/10", 3, 3, Rat(3, 10)},
      {"C(n-4,k-3)/C(n-2,k-2)<21/100", 4, 3, Rat(21, 100)},
      {"C(n-4,l-4)/C(n-2,l-2)<9/100", 4, 4, Rat(9, 100)},
      {"C(n-5,l-4)/C(n-2,l-2)<63/1000", 5, 4, Rat(63, 1000)},
  };
  return table;
}

namespace detail {

/// (n - a)(n - a - 1)...(n - a - m + 1); zero polynomial for m < 0.
inline Poly falling(long long a, long long m) {
  if (m < 0) return Poly();
  Poly p(1);
  for (long long j = 0; j < m; ++j) p = p * Poly::linear(1, -a - j);
  return p;
}

}  // namespace detail

inline Rat ratio_constant_value(const RatioConstant& rc, long long n, long long m) {
  return Rat(binomial(n - rc.top_shift, m - rc.bottom_shift)) / Rat(binomial(n - 2, m - 2));
}

/// Checks the four constants exactly at n = ceil(3.38 m) for every m in range
/// (m = k for the first two, m = l for the last two) and certifies each ratio
/// is nonincreasing in n from there on.
inline SweepReport ratio_constants_check(long long kmax, long long lmax) {
  SweepReport rep;
  rep.name = "sweep-ratios";
  rep.grid = "k=2.." + std::to_string(kmax) + " l=2.." + std::to_string(lmax);
  const auto& table = ratio_constants();
  for (std::size_t c = 0; c < table.size(); ++c) {
    const RatioConstant& rc = table[c];
    const bool on_k = c < 2;
    const long long mmax = on_k ? kmax : lmax;
    for (long long m = 2; m <= mmax; ++m) {
      const long long n0 = threshold_n(m);
      const Rat v = ratio_constant_value(rc, n0, m);
      SweepRow row{rc.name, n0, std::nullopt, std::nullopt, std::nullopt, std::nullopt, v, v < rc.bound, true};
      (on_k ? row.k : row.l) = m;
      rep.add(row);
      // r(n) = P(n)/Q(n) up to a positive constant; nonincreasing iff
      // P(n)Q(n+1) - P(n+1)Q(n) >= 0, with Q > 0.
      const Poly p = detail::falling(rc.top_shift, m - rc.bottom_shift);
      const Poly q = detail::falling(2, m - 2);
      const Poly mono = p * q.shifted(1) - p.shifted(1) * q;
      const TailCertificate cm = certify_from(mono, n0, false);
      const TailCertificate cq = certify_from(q, n0, true);
      SweepRow mrow{std::string("monotone:") + rc.name, cm.shift_point, std::nullopt, std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt, cm.ok && cq.ok, true};
      (on_k ? mrow.k : mrow.l) = m;
      if (!mrow.pass) rep.notes.push_back(std::string(rc.name) + " m=" + std::to_string(m) + ": " + cm.detail + "; " + cq.detail);
      rep.add(mrow);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Auxiliary sign claims used to establish T > 1, evaluated on integer grids.

struct ParamPoint {
  long long n, k, l, s, i;
};

/// g(n,s,k,l,i) = (n-s-k+i)(s(n-s+1) - (s-i+2)(l+i-s-2)) - (n-s+1)(i(n-2k-s+2i) + s(k-i+1))
inline Int case1_g(long long n, long long s, long long k, long long l, long long i) {
  return Int(n - s - k + i) * (Int(s) * (n - s + 1) - Int(s - i + 2) * (l + i - s - 2)) -
         Int(n - s + 1) * (Int(i) * (n - 2 * k - s + 2 * i) + Int(s) * (k - i + 1));
}

/// h(n,s,k,l,i) = (n-l-i+2)(s(n-s+1) - i(k-i)) - (n-s+1)((s-i+2)(n-2l-2i+s+4) + s(l+i-s-1))
inline Int case1_h(long long n, long long s, long long k, long long l, long long i) {
  return Int(n - l - i + 2) * (Int(s) * (n - s + 1) - Int(i) * (k - i)) -
         Int(n - s + 1) * (Int(s - i + 2) * (n - 2 * l - 2 * i + s + 4) + Int(s) * (l + i - s - 1));
}

struct SignClaim {
  std::string name;
  std::function<bool(const ParamPoint&)> applies;
  std::function<Rat(const ParamPoint&)> value;  // claimed > 0
  bool asserted = true;
};

namespace detail {

inline Rat R(long long v) { return Rat(v); }
inline Rat dec(long long num, long long den) { return Rat(num, den); }

/// Region in which T is used: admissible, not an exception, max(k,l) >= s.
inline bool t_region(const ParamPoint& p) {
  return lemma32_admissible(p.n, p.k, p.l, p.s, p.i) && !is_exception_point(p.s, p.i) && std::max(p.k, p.l) >= p.s;
}

}  // namespace detail

inline const std::vector<SignClaim>& proof_sign_claims() {
  using detail::dec;
  using detail::R;
  static const std::vector<SignClaim> claims = [] {
    std::vector<SignClaim> c;
    auto case1 = [](const ParamPoint& p) { return detail::t_region(p) && p.i >= 5 && p.i <= p.s - 3; };
    auto case2 = [](const ParamPoint& p) { return detail::t_region(p) && p.i == 4 && p.s >= 7; };
    auto case3 = [](const ParamPoint& p) { return detail::t_region(p) && p.i == 3 && p.s >= 7; };
    auto case3s6 = [](const ParamPoint& p) { return detail::t_region(p) && p.i == 3 && p.s == 6; };

    c.push_back({"case1:g", case1, [](const ParamPoint& p) { return Rat(case1_g(p.n, p.s, p.k, p.l, p.i)); }});
    c.push_back({"case1:h", case1, [](const ParamPoint& p) { return Rat(case1_h(p.n, p.s, p.k, p.l, p.i)); }});
    // As printed, with k and l exchanged in h; recorded only.
    c.push_back({"case1:h-as-printed", case1,
                 [](const ParamPoint& p) { return Rat(case1_h(p.n, p.s, p.l, p.k, p.i)); }, false});

    // i = 4, s >= 7
    c.push_back({"case2:denominator-gap(l>=k)", [=](const ParamPoint& p) { return case2(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R((s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3)) - dec(38, 100) * l -
                          R(4 * (n - 2 * k - s + 8) + s * (k - 3));
                 }});
    c.push_back({"case2:p(l>=k)", [=](const ParamPoint& p) { return case2(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - (s - 2) * (l - s + 2)) * R(n - s - k + 4) -
                          (R(4 * (n - 2 * k - s + 8) + s * (k - 3)) + dec(38, 100) * l) * R(n - s + 1);
                 }});
    c.push_back({"case2:q(l>=k)", [=](const ParamPoint& p) { return case2(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - 4 * (k - 4)) * R(n - l - 2) -
                          (R((s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3)) - dec(38, 100) * l) * R(n - s + 1);
                 }});
    c.push_back({"case2:factor-gap(k>=l)", [=](const ParamPoint& p) { return case2(p) && p.k >= p.l; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(n - l - 2) + dec(1, 10) * k - R(n - s - k + 4);
                 }});
    c.push_back({"case2:s(k>=l)", [=](const ParamPoint& p) { return case2(p) && p.k >= p.l; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - (s - 2) * (l - s + 2)) * (R(n - s - k + 4) - dec(1, 10) * k) -
                          R(4 * (n - 2 * k - s + 8) + s * (k - 3)) * R(n - s + 1);
                 }});
    c.push_back({"case2:t(k>=l)", [=](const ParamPoint& p) { return case2(p) && p.k >= p.l; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - 4 * (k - 4)) * (R(n - l - 2) + dec(1, 10) * k) -
                          R((s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3)) * R(n - s + 1);
                 }});

    // i = 3, s >= 7
    c.push_back({"case3:square-gap(l>=k)", [=](const ParamPoint& p) { return case3(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   const Rat base = R(n - s + 1);
                   return (base - dec(27, 100) * l) * (base + dec(31, 100) * l) - base * base;
                 }});
    c.push_back({"case3:p(l>=k)", [=](const ParamPoint& p) { return case3(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - 3 * (k - 3)) * R(n - l - 1) -
                          R((s - 1) * (n - 2 * l + s - 2) + s * (l - s + 2)) * (R(n - s + 1) - dec(27, 100) * l);
                 }});
    c.push_back({"case3:q(l>=k)", [=](const ParamPoint& p) { return case3(p) && p.l >= p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - (s - 1) * (l - s + 1)) * R(n - s - k + 3) -
                          R(3 * (n - 2 * k - s + 6) + s * (k - 2)) * (R(n - s + 1) + dec(31, 100) * l);
                 }});
    c.push_back({"case3:factor-gap(l<k)", [=](const ParamPoint& p) { return case3(p) && p.l < p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(n - l - 1) + dec(12, 100) * k - R(n - s - k + 3);
                 }});
    c.push_back({"case3:p(l<k)", [=](const ParamPoint& p) { return case3(p) && p.l < p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - 3 * (k - 3)) * (R(n - l - 1) + dec(12, 100) * k) -
                          R((s - 1) * (n - 2 * l + s - 2) + s * (l - s + 2)) * R(n - s + 1);
                 }});
    c.push_back({"case3:q(l<k)", [=](const ParamPoint& p) { return case3(p) && p.l < p.k; },
                 [](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   return R(s * (n - s + 1) - (s - 1) * (l - s + 1)) * (R(n - s - k + 3) - dec(12, 100) * k) -
                          R(3 * (n - 2 * k - s + 6) + s * (k - 2)) * R(n - s + 1);
                 }});

    // i = 3, s = 6: the scaling constant is 0.619 m and 0.733 m with m = k when
    // l >= k and m = l when k > l.
    auto s6_m = [](const ParamPoint& p) { return p.l >= p.k ? p.k : p.l; };
    c.push_back({"case3:s6-denominator-gap", case3s6, [=](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   const long long m = s6_m(p);
                   const Rat a = R(3 * (n - 2 * k) + 6 * (k - 2));
                   const Rat b = R(5 * (n - 2 * l + 4) + 6 * (l - 4));
                   return (a + dec(619, 1000) * m) * (b - dec(733, 1000) * m) - a * b;
                 }});
    c.push_back({"case3:s6-bound1", case3s6, [=](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   const long long m = s6_m(p);
                   return R(n - k - 3) * R(6 * (n - 5) - 5 * (l - 5)) -
                          R(n - 5) * (R(3 * (n - 2 * k) + 6 * (k - 2)) + dec(619, 1000) * m);
                 }});
    c.push_back({"case3:s6-bound2", case3s6, [=](const ParamPoint& p) {
                   const auto [n, k, l, s, i] = p;
                   const long long m = s6_m(p);
                   return R(n - l - 1) * R(6 * (n - 5) - 3 * (k - 3)) -
                          R(n - 5) * (R(5 * (n - 2 * l + 4) + 6 * (l - 4)) - dec(733, 1000) * m);
                 }});
    return c;
  }();
  return claims;
}

/// Evaluates every auxiliary sign claim on its region of the grid.
inline SweepReport proof_polynomial_signs(const Grid& g) {
  SweepReport rep;
  rep.name = "sweep-polys";
  rep.grid = "k=" + std::to_string(g.kmin) + ".." + std::to_string(g.kmax) + " l=" + std::to_string(g.lmin) + ".." +
             std::to_string(g.lmax) + " nwindow=" + std::to_string(g.nwindow);
  const auto& claims = proof_sign_claims();
  std::vector<std::size_t> hits(claims.size()), bad(claims.size());
  std::size_t identity_failures = 0;
  for (long long k = g.kmin; k <= g.kmax; ++k)
    for (long long l = g.lmin; l <= g.lmax; ++l) {
      const long long n0 = threshold_n(std::max(k, l));
      for (long long s = 4; s <= k + l - 2; ++s)
        for (long long i = 3; i <= s - 1; ++i)
          for (long long n = n0; n <= n0 + g.nwindow; ++n) {
            const ParamPoint p{n, k, l, s, i};
            for (std::size_t c = 0; c < claims.size(); ++c) {
              if (!claims[c].applies(p)) continue;
              const Rat v = claims[c].value(p);
              ++hits[c];
              if (v <= 0) ++bad[c];
              rep.add({claims[c].name, n, k, l, s, i, v, v > 0, claims[c].asserted});
            }
            if (detail::t_region(p) && i >= 5 && i <= s - 3 &&
                case1_h(n, s, k, l, i) != case1_g(n, s, l, k, s + 2 - i))
              ++identity_failures;
          }
    }
  for (std::size_t c = 0; c < claims.size(); ++c)
    rep.notes.push_back(claims[c].name + ": " + std::to_string(hits[c]) + " points, " + std::to_string(bad[c]) +
                        " nonpositive" + (claims[c].asserted ? "" : " (recorded only)"));
  rep.add({"identity:h(k,l,i)=g(l,k,s+2-i)", std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
           std::nullopt, identity_failures == 0, true});
  return rep;
}

}  // namespace xfam
