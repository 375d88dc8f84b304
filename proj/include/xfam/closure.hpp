#pragma once

// The cross-t-intersecting relation |A ∩ B| >= t between k-sets and l-sets,
// and the two antitone maps it induces:
//
//   beta(A)  = { B in ([n] choose l) : |A ∩ B| >= t for every A in A }
//   alpha(B) = { A in ([n] choose k) : |A ∩ B| >= t for every B in B }
//
// A pair with A = alpha(B) and B = beta(A) is a closed pair; closed pairs with
// both sides nonempty are exactly the maximal cross-t-intersecting pairs.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "xfam/sets.hpp"

namespace xfam {

struct CrossParams {
  GroundSize n;
  int k;
  int l;
  int t;

  CrossParams(GroundSize n_, int k_, int l_, int t_) : n(n_), k(k_), l(l_), t(t_) {
    if (t < 1) throw DomainError("cross parameters: t must be >= 1");
    if (t > std::min(k, l) || std::max(k, l) > n.value())
      throw DomainError("cross parameters need t <= min(k,l) <= max(k,l) <= n (n=" +
                        std::to_string(n.value()) + " k=" + std::to_string(k) + " l=" +
                        std::to_string(l) + " t=" + std::to_string(t) + ")");
  }

  friend bool operator==(const CrossParams&, const CrossParams&) = default;
};

/// Largest level set materialised by level_set().
inline constexpr unsigned long long kLevelSetLimit = 5'000'000;

/// ([n] choose k), built once per (n, k) and shared read-only.
inline const UniformFamily& level_set(GroundSize n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const UniformFamily>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n.value(), k}];
  if (!slot) {
    if (k < 0 || k > n.value()) throw DomainError("level_set: k outside [0, n]");
    if (binomial(n.value(), k) > kLevelSetLimit)
      throw DomainError("level_set: C(" + std::to_string(n.value()) + "," + std::to_string(k) +
                        ") too large to enumerate");
    slot = std::make_unique<const UniformFamily>(enumerate_ksubsets(n, k));
  }
  return *slot;
}

inline bool is_cross_t(const UniformFamily& a, const UniformFamily& b, int t) {
  if (t < 0) throw DomainError("is_cross_t: t must be nonnegative");
  if (a.ground() != b.ground()) throw DomainError("is_cross_t: ground sizes differ");
  for (Mask x : a)
    for (Mask y : b)
      if (popcount(x & y) < t) return false;
  return true;
}

namespace detail {

inline UniformFamily polar(const UniformFamily& side, int other_uniformity, int t) {
  const GroundSize n = side.ground();
  if (t < 0 || other_uniformity < 0 || other_uniformity > n.value())
    throw DomainError("closure: uniformity outside [0, n] or negative t");
  std::vector<Mask> out;
  for (Mask cand : level_set(n, other_uniformity)) {
    bool ok = true;
    for (Mask m : side)
      if (popcount(cand & m) < t) {
        ok = false;
        break;
      }
    if (ok) out.push_back(cand);
  }
  return UniformFamily(n, other_uniformity, std::move(out));
}

}  // namespace detail

/// l-sets meeting every member of `a` in at least t points; the full level when `a` is empty.
inline UniformFamily beta(const UniformFamily& a, int l, int t) { return detail::polar(a, l, t); }

/// k-sets meeting every member of `b` in at least t points; the full level when `b` is empty.
inline UniformFamily alpha(const UniformFamily& b, int k, int t) { return detail::polar(b, k, t); }

struct ClosedPair {
  CrossParams params;
  UniformFamily a;
  UniformFamily b;

  Int product() const { return Int(a.size()) * b.size(); }
};

inline bool is_closed(const UniformFamily& a, const UniformFamily& b, int t) {
  return alpha(b, a.k(), t) == a && beta(a, b.k(), t) == b;
}

/// (alpha(beta(A0)), beta(A0)): the closed pair generated by A0.
inline ClosedPair close_pair(const UniformFamily& a0, const CrossParams& p) {
  if (a0.ground() != p.n || a0.k() != p.k) throw DomainError("close_pair: seed does not match parameters");
  UniformFamily b = beta(a0, p.l, p.t);
  UniformFamily a = alpha(b, p.k, p.t);
  return ClosedPair{p, std::move(a), std::move(b)};
}

/// True when every member of A ∪ B contains a common 2-set.
inline bool is_trivial_pair(const ClosedPair& p) {
  if (p.a.empty() || p.b.empty()) throw DomainError("is_trivial_pair: a side is empty");
  return common_core({p.a, p.b}).size() >= 2;
}

}  // namespace xfam
