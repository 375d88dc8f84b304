#pragma once

// Named extremal families with their membership predicates and closed-form sizes.
//
//   Star(T)      : T ⊆ A,                              |T| = 2
//   Frankl(t, r) : |A ∩ [t+2r]| >= t + r
//   A(s)         : [s] ⊆ A
//   B(s)         : |A ∩ [s]| >= 2
//   H(s)         : [2] ⊆ A  or  |A ∩ [s]| >= s - 1
//   I(s)         : [2] ⊆ A  and |A ∩ [s]| >= 3

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "xfam/closure.hpp"
#include "xfam/sets.hpp"

namespace xfam {

enum class FamilyKind { Star, Frankl, A, B, H, I };

inline std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Star: return "star";
    case FamilyKind::Frankl: return "frankl";
    case FamilyKind::A: return "A";
    case FamilyKind::B: return "B";
    case FamilyKind::H: return "H";
    case FamilyKind::I: return "I";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_kind(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "star") return FamilyKind::Star;
  if (s == "frankl" || s == "f") return FamilyKind::Frankl;
  if (s == "a") return FamilyKind::A;
  if (s == "b") return FamilyKind::B;
  if (s == "h") return FamilyKind::H;
  if (s == "i") return FamilyKind::I;
  return std::nullopt;
}

struct FamilySpec {
  FamilyKind kind = FamilyKind::Star;
  int n = 0;
  int k = 0;
  Mask core = element_bit(1) | element_bit(2);  // T for Star
  int t = 2;                                     // Frankl only
  int r = 0;                                     // Frankl only
  int s = 3;                                     // A, B, H, I

  static FamilySpec star(int n, int k, Mask core = element_bit(1) | element_bit(2)) {
    return {FamilyKind::Star, n, k, core, 2, 0, 0};
  }
  static FamilySpec frankl(int n, int k, int r, int t = 2) { return {FamilyKind::Frankl, n, k, 0, t, r, 0}; }
  static FamilySpec a(int n, int k, int s) { return {FamilyKind::A, n, k, 0, 2, 0, s}; }
  static FamilySpec b(int n, int k, int s) { return {FamilyKind::B, n, k, 0, 2, 0, s}; }
  static FamilySpec h(int n, int k, int s) { return {FamilyKind::H, n, k, 0, 2, 0, s}; }
  static FamilySpec i(int n, int k, int s) { return {FamilyKind::I, n, k, 0, 2, 0, s}; }
};

inline void validate(const FamilySpec& f) {
  auto fail = [&](const std::string& why) {
    throw DomainError(to_string(f.kind) + " family: " + why + " (n=" + std::to_string(f.n) +
                      " k=" + std::to_string(f.k) + ")");
  };
  if (f.n < 2) fail("n must be >= 2");
  if (f.k < 0 || f.k > f.n) fail("k outside [0, n]");
  switch (f.kind) {
    case FamilyKind::Star:
      if (popcount(f.core) != 2 || (f.n < 64 && (f.core & ~prefix_mask(f.n)))) fail("core must be a 2-subset of [n]");
      break;
    case FamilyKind::Frankl:
      if (f.t < 1) fail("t must be >= 1");
      if (f.r < 0) fail("r must be >= 0");
      if (f.t + 2 * f.r > f.n) fail("t + 2r exceeds n");
      break;
    case FamilyKind::H:
      if (f.s < 3 || f.s > std::min(f.n, f.k + 1)) fail("s must lie in [3, min(n, k+1)]");
      break;
    case FamilyKind::A:
    case FamilyKind::B:
    case FamilyKind::I:
      if (f.s < 3 || f.s > f.n) fail("s must lie in [3, n]");
      break;
  }
}

/// Membership predicate; assumes `m` is a k-subset of [n].
inline bool is_member(const FamilySpec& f, Mask m) {
  const Mask two = element_bit(1) | element_bit(2);
  switch (f.kind) {
    case FamilyKind::Star: return (m & f.core) == f.core;
    case FamilyKind::Frankl: return popcount(m & prefix_mask(f.t + 2 * f.r)) >= f.t + f.r;
    case FamilyKind::A: return (m & prefix_mask(f.s)) == prefix_mask(f.s);
    case FamilyKind::B: return popcount(m & prefix_mask(f.s)) >= 2;
    case FamilyKind::H: return (m & two) == two || popcount(m & prefix_mask(f.s)) >= f.s - 1;
    case FamilyKind::I: return (m & two) == two && popcount(m & prefix_mask(f.s)) >= 3;
  }
  return false;
}

inline UniformFamily build(const FamilySpec& f) {
  validate(f);
  const GroundSize n(f.n);
  std::vector<Mask> out;
  for (Mask m : level_set(n, f.k))
    if (is_member(f, m)) out.push_back(m);
  return UniformFamily(n, f.k, std::move(out));
}

/// Closed-form size; valid for any n (no enumeration).
inline Int size_formula(const FamilySpec& f) {
  validate(f);
  const int n = f.n, k = f.k;
  switch (f.kind) {
    case FamilyKind::Star: return binomial(n - 2, k - 2);
    case FamilyKind::Frankl: {
      const int w = f.t + 2 * f.r;
      Int total = 0;
      for (int j = f.t + f.r; j <= std::min(k, w); ++j) total += binomial(w, j) * binomial(n - w, k - j);
      return total;
    }
    case FamilyKind::A: return binomial(n - f.s, k - f.s);
    case FamilyKind::B: {
      Int total = 0;
      for (int j = 2; j <= std::min(f.s, k); ++j) total += binomial(f.s, j) * binomial(n - f.s, k - j);
      return total;
    }
    case FamilyKind::H:
      // |{[2] ⊆ A}| + |{|A∩[s]| >= s-1}| - |both|
      //   = C(n-2,k-2) + [s C(n-s,k-s+1) + C(n-s,k-s)] - [(s-2) C(n-s,k-s+1) + C(n-s,k-s)]
      return binomial(n - 2, k - 2) + 2 * binomial(n - f.s, k - f.s + 1);
    case FamilyKind::I: return binomial(n - 2, k - 2) - binomial(n - f.s, k - 2);
  }
  return 0;
}

/// |H_{n,k,s}| · |I_{n,l,s}| from the membership definitions.
inline Int product_h(int n, int k, int l, int s) {
  return size_formula(FamilySpec::h(n, k, s)) * size_formula(FamilySpec::i(n, l, s));
}

/// |F_{n,k,2,r}| · |F_{n,l,2,r}|.
inline Int product_f(int n, int k, int l, int r) {
  return size_formula(FamilySpec::frankl(n, k, r)) * size_formula(FamilySpec::frankl(n, l, r));
}

/// The printed right-hand side (C(n-2,k-2) + t C(n-s,k-s+1)) (C(n-2,l-2) - C(n-s,l-2))
/// with an explicit value substituted for its free symbol t.
inline Int h_displayed(int n, int k, int l, int s, const Int& t) {
  return (binomial(n - 2, k - 2) + t * binomial(n - s, k - s + 1)) * (binomial(n - 2, l - 2) - binomial(n - s, l - 2));
}

struct HFormulaDiagnostic {
  Int exact;                                    // product_h
  std::vector<std::pair<std::string, Int>> tried;  // substitution label -> displayed value
  std::vector<std::string> matching;           // labels whose value equals `exact`
  std::string message;
};

/// The printed h-formula has a symbol t with no binding. Evaluate it under the
/// candidate readings t = 2, s-1, s-2 and report which agree with the exact product.
inline HFormulaDiagnostic h_formula_diagnostic(int n, int k, int l, int s) {
  HFormulaDiagnostic d;
  d.exact = product_h(n, k, l, s);
  const std::pair<std::string, int> subs[] = {{"t=2", 2}, {"t=s-1", s - 1}, {"t=s-2", s - 2}};
  for (const auto& [label, tv] : subs) {
    Int v = h_displayed(n, k, l, s, tv);
    if (v == d.exact) d.matching.push_back(label);
    d.tried.emplace_back(label, std::move(v));
  }
  d.message = "INCONSISTENT: displayed h-formula uses an unbound symbol t; exact |H||I| = " + d.exact.str() +
              "; readings matching the exact product:";
  if (d.matching.empty()) d.message += " none";
  for (const auto& m : d.matching) d.message += " " + m;
  return d;
}

}  // namespace xfam
