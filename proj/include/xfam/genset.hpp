#pragma once

// Generating sets of a k-uniform family A.
//
// The canonical generating upset is U(A) = { E : every k-superset of E is in A }.
// Its minimal elements form the generator antichain g(A); s+(E) is the largest
// element of E, and g*_i(A) collects the generators of size i containing
// s = s+(g(A)). For a left-compressed family the blocks
//
//   D(E) = { B in ([n] choose k) : B ∩ [s+(E)] = E },   E in g(A),
//
// partition A.

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xfam/closure.hpp"
#include "xfam/sets.hpp"

namespace xfam {

struct GeneratorAntichain {
  GroundSize n;
  int k;
  std::vector<Mask> gens;  // increasing mask order
  UniformFamily source;
};

struct SliceView {
  int s_plus = 0;
  std::map<int, std::vector<Mask>> slices;  // size -> generators containing s_plus
};

inline int s_plus(Mask e) {
  if (e == 0) throw DomainError("s_plus: empty set");
  return max_element(e);
}

inline int s_plus(const Subset& e) { return s_plus(e.bits()); }

inline int s_plus(std::span<const Mask> sets) {
  if (sets.empty()) throw DomainError("s_plus: empty collection");
  // The empty generator (full k-level) contributes nothing.
  int best = 0;
  for (Mask e : sets)
    if (e != 0) best = std::max(best, s_plus(e));
  return best;
}

inline int s_plus(const GeneratorAntichain& g) { return s_plus(std::span<const Mask>(g.gens)); }

namespace detail {

inline unsigned long long binom_u64(int n, int k) {
  return binomial(n, k).convert_to<unsigned long long>();
}

}  // namespace detail

/// Minimal elements of the maximal generating upset of A.
inline GeneratorAntichain canonical_generators(const UniformFamily& a) {
  if (a.empty()) throw DomainError("canonical_generators: empty family");
  const int n = a.n();
  const int k = a.k();
  // cover[E] = number of members containing E; E is in U(A) iff all of its
  // C(n-|E|, k-|E|) k-supersets are members.
  std::unordered_map<Mask, unsigned long long> cover;
  for (Mask m : a) {
    for (Mask sub = m;; sub = (sub - 1) & m) {
      ++cover[sub];
      if (sub == 0) break;
    }
  }
  std::vector<unsigned long long> needed(static_cast<std::size_t>(k) + 1);
  for (int c = 0; c <= k; ++c) needed[static_cast<std::size_t>(c)] = detail::binom_u64(n - c, k - c);
  auto in_upset = [&](Mask e) {
    auto it = cover.find(e);
    return it != cover.end() && it->second == needed[static_cast<std::size_t>(popcount(e))];
  };
  std::vector<Mask> gens;
  for (const auto& [e, count] : cover) {
    if (count != needed[static_cast<std::size_t>(popcount(e))]) continue;
    bool minimal = true;
    for (Mask rest = e; rest && minimal; rest &= rest - 1)
      if (in_upset(e & ~(rest & (~rest + 1)))) minimal = false;
    if (minimal) gens.push_back(e);
  }
  std::sort(gens.begin(), gens.end());
  return GeneratorAntichain{a.ground(), k, std::move(gens), a};
}

/// Generators containing s, grouped by size.
inline SliceView slice(const GeneratorAntichain& g, int s) {
  SliceView v;
  v.s_plus = s;
  if (s < 1 || s > 64) return v;
  for (Mask e : g.gens)
    if (e & element_bit(s)) v.slices[popcount(e)].push_back(e);
  return v;
}

inline SliceView slice(const GeneratorAntichain& g) { return slice(g, s_plus(g)); }

/// g*_i relative to the element s.
inline std::vector<Mask> g_star(const GeneratorAntichain& g, int s, int i) {
  std::vector<Mask> out;
  if (s < 1 || s > 64) return out;
  for (Mask e : g.gens)
    if (popcount(e) == i && (e & element_bit(s))) out.push_back(e);
  return out;
}

/// { B : B ∩ [s] = E } for E ⊆ [s].
inline UniformFamily expand_D_prefix(Mask e, int s, GroundSize n, int k) {
  if (s < 0 || s > n.value()) throw DomainError("expand_D: prefix length outside [0, n]");
  if (e & ~prefix_mask(s)) throw DomainError("expand_D: set is not inside the prefix");
  const int c = popcount(e);
  std::vector<Mask> out;
  if (c <= k) {
    for_each_ksubset(n.value() - s, k - c, [&](Mask tail) { out.push_back(e | (tail << s)); });
  }
  return UniformFamily(n, k, std::move(out));
}

/// D(E) = { B : B ∩ [s+(E)] = E }.
inline UniformFamily expand_D(const Subset& e, int k) {
  const int s = e.empty() ? 0 : s_plus(e);
  return expand_D_prefix(e.bits(), s, e.ground(), k);
}

/// True iff the D-blocks of the generators are pairwise disjoint and cover A exactly.
inline bool verify_decomposition(const UniformFamily& a, const GeneratorAntichain& g) {
  std::vector<Mask> all;
  for (Mask e : g.gens) {
    const UniformFamily block = expand_D(Subset(g.n, e), g.k);
    all.insert(all.end(), block.begin(), block.end());
  }
  const std::size_t total = all.size();
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() != total) return false;
  return std::equal(all.begin(), all.end(), a.begin(), a.end());
}

/// Union of the k-supersets of the generators (the k-level of the upset).
inline UniformFamily upset_level(const GeneratorAntichain& g) {
  std::vector<Mask> out;
  for (Mask m : level_set(g.n, g.k))
    for (Mask e : g.gens)
      if ((m & e) == e) {
        out.push_back(m);
        break;
      }
  return UniformFamily(g.n, g.k, std::move(out));
}

inline bool is_antichain(std::span<const Mask> sets) {
  for (Mask x : sets)
    for (Mask y : sets)
      if (x != y && (x & y) == x) return false;
  return true;
}

inline bool is_t_intersecting(std::span<const Mask> sets, int t) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j)
      if (popcount(sets[i] & sets[j]) < t) return false;
  return true;
}

/// Slice duality for a maximal left-compressed cross-t pair: with s the larger
/// of the two s+ values, g*_i(A) is nonempty iff g*_{s+t-i}(B) is, and every
/// E in g*_i(A) has a partner F with |E ∩ F| = t and E ∪ F = [s].
/// Returns an empty string when the law holds, else a description of the failure.
inline std::string check_slice_duality(const GeneratorAntichain& ga, const GeneratorAntichain& gb, int t) {
  const int s = std::max(s_plus(ga), s_plus(gb));
  for (int i = t; i <= ga.k; ++i) {
    const auto ea = g_star(ga, s, i);
    const int j = s + t - i;
    const auto fb = j >= 0 ? g_star(gb, s, j) : std::vector<Mask>{};
    if (ea.empty() != fb.empty())
      return "g*_" + std::to_string(i) + "(A) and g*_" + std::to_string(j) + "(B) disagree on emptiness (s=" +
             std::to_string(s) + ")";
    for (Mask e : ea) {
      const bool partner = std::any_of(fb.begin(), fb.end(), [&](Mask f) {
        return popcount(e & f) == t && (e | f) == prefix_mask(s);
      });
      if (!partner) return "generator " + format_set(e) + " has no complementary partner";
    }
  }
  return {};
}

struct PushResult {
  int s = 0;
  UniformFamily a1;
  UniformFamily b1;
  Int size_a1_formula;
  Int size_b1_formula;
  std::size_t g_star_a = 0;  // |g*_i(A)|
  std::size_t g_star_b = 0;  // |g*_{s+t-i}(B)|
};

/// A1 = A ∪ D(g*_i(A)'), B1 = B \ D(g*_{s+t-i}(B)), where a primed generator
/// drops s and its block is taken with trace exactly E' on [s]. Sizes come
/// back both enumerated (a1.size(), b1.size()) and from the closed forms
///   |A1| = |A| + |g*_i(A)| C(n-s, k-i+1),
///   |B1| = |B| - |g*_{s+t-i}(B)| C(n-s, l+i-s-t).
inline PushResult push_transforms(const UniformFamily& a, const UniformFamily& b, int i, int t) {
  if (a.ground() != b.ground()) throw DomainError("push_transforms: ground sizes differ");
  const GeneratorAntichain ga = canonical_generators(a);
  const GeneratorAntichain gb = canonical_generators(b);
  const int s = std::max(s_plus(ga), s_plus(gb));
  const auto star_a = g_star(ga, s, i);
  if (star_a.empty())
    throw PreconditionError("push_transforms: g*_" + std::to_string(i) + "(A) is empty (s=" + std::to_string(s) + ")");
  const auto star_b = g_star(gb, s, s + t - i);
  const GroundSize n = a.ground();

  std::vector<Mask> a1(a.begin(), a.end());
  for (Mask e : star_a) {
    const UniformFamily block = expand_D_prefix(e & ~element_bit(s), s, n, a.k());
    a1.insert(a1.end(), block.begin(), block.end());
  }
  std::vector<Mask> drop;
  for (Mask f : star_b) {
    const UniformFamily block = expand_D_prefix(f, s, n, b.k());
    drop.insert(drop.end(), block.begin(), block.end());
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Mask> b1;
  for (Mask m : b)
    if (!std::binary_search(drop.begin(), drop.end(), m)) b1.push_back(m);

  PushResult r{s,
               UniformFamily(n, a.k(), std::move(a1)),
               UniformFamily(n, b.k(), std::move(b1)),
               0,
               0,
               star_a.size(),
               star_b.size()};
  r.size_a1_formula = Int(a.size()) + Int(star_a.size()) * binomial(n.value() - s, a.k() - i + 1);
  r.size_b1_formula = Int(b.size()) - Int(star_b.size()) * binomial(n.value() - s, b.k() + i - s - t);
  return r;
}

/// The opposite move: A2 = A \ D(g*_i(A)), B2 = B ∪ D(g*_{s+t-i}(B)').
/// Returns {A2, B2}. Requires g*_{s+t-i}(B) to be nonempty.
inline std::pair<UniformFamily, UniformFamily> pull_transforms(const UniformFamily& a, const UniformFamily& b,
                                                               int i, int t) {
  const GeneratorAntichain ga = canonical_generators(a);
  const GeneratorAntichain gb = canonical_generators(b);
  const int s = std::max(s_plus(ga), s_plus(gb));
  const auto star_a = g_star(ga, s, i);
  const auto star_b = g_star(gb, s, s + t - i);
  if (star_b.empty()) throw PreconditionError("pull_transforms: g*_{s+t-i}(B) is empty");
  const GroundSize n = a.ground();
  std::vector<Mask> drop;
  for (Mask e : star_a) {
    const UniformFamily block = expand_D_prefix(e, s, n, a.k());
    drop.insert(drop.end(), block.begin(), block.end());
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Mask> a2;
  for (Mask m : a)
    if (!std::binary_search(drop.begin(), drop.end(), m)) a2.push_back(m);
  std::vector<Mask> b2(b.begin(), b.end());
  for (Mask f : star_b) {
    const UniformFamily block = expand_D_prefix(f & ~element_bit(s), s, n, b.k());
    b2.insert(b2.end(), block.begin(), block.end());
  }
  return {UniformFamily(n, a.k(), std::move(a2)), UniformFamily(n, b.k(), std::move(b2))};
}

/// C(s-1, i) / C(s-1, i-1): the normalized-matching lower bound on the
/// upper-shadow ratio of a family of (i-1)-subsets of [s-1].
inline Rat sperner_bound(int s, int i) {
  return Rat(binomial(s - 1, i)) / Rat(binomial(s - 1, i - 1));
}

/// |upper shadow of gslice inside ([s-1] choose i)| / |gslice|.
inline Rat sperner_shadow_ratio(std::span<const Mask> gslice, int s, int i) {
  if (gslice.empty()) throw DomainError("sperner_shadow_ratio: empty slice");
  const Mask ground = prefix_mask(s - 1);
  std::vector<Mask> shadow;
  for (Mask e : gslice) {
    if ((e & ~ground) || popcount(e) != i - 1)
      throw DomainError("sperner_shadow_ratio: " + format_set(e) + " is not an (i-1)-subset of [s-1]");
    for (int x = 1; x <= s - 1; ++x)
      if (!(e & element_bit(x))) shadow.push_back(e | element_bit(x));
  }
  std::sort(shadow.begin(), shadow.end());
  shadow.erase(std::unique(shadow.begin(), shadow.end()), shadow.end());
  std::vector<Mask> distinct(gslice.begin(), gslice.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Rat ratio(Int(shadow.size()), Int(distinct.size()));
  if (ratio < sperner_bound(s, i)) throw std::logic_error("sperner_shadow_ratio: normalized matching violated");
  return ratio;
}

}  // namespace xfam
