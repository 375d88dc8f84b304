#pragma once

// Ground-set arithmetic: subsets of [n] as 64-bit masks (element e lives at
// bit e-1), k-uniform families kept sorted and deduplicated, and k-subset
// enumeration.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "xfam/exact.hpp"

namespace xfam {

using Mask = std::uint64_t;

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr int popcount(Mask m) { return std::popcount(m); }

/// Mask of the prefix [m] = {1..m}.
constexpr Mask prefix_mask(int m) {
  return m <= 0 ? 0 : (m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1);
}

/// Largest element of a nonempty mask.
constexpr int max_element(Mask m) { return 64 - std::countl_zero(m); }

class GroundSize {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 64;

  explicit GroundSize(int n) : n_(n) {
    if (n < kMin || n > kMax)
      throw DomainError("ground size n = " + std::to_string(n) + " outside [2, 64]");
  }

  int value() const noexcept { return n_; }
  Mask full_mask() const noexcept { return prefix_mask(n_); }

  friend bool operator==(GroundSize, GroundSize) = default;

 private:
  int n_;
};

class Subset {
 public:
  Subset(GroundSize n, Mask bits) : n_(n), bits_(bits) {
    if (bits & ~n.full_mask())
      throw DomainError("subset has an element above n = " + std::to_string(n.value()));
  }

  static Subset of(GroundSize n, std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) {
      if (e < 1 || e > n.value())
        throw DomainError("element " + std::to_string(e) + " outside [1, " +
                          std::to_string(n.value()) + "]");
      m |= element_bit(e);
    }
    return Subset(n, m);
  }

  Mask bits() const noexcept { return bits_; }
  GroundSize ground() const noexcept { return n_; }
  int size() const noexcept { return popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int e) const noexcept { return e >= 1 && e <= 64 && (bits_ & element_bit(e)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_.value() <=> b.n_.value(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  GroundSize n_;
  Mask bits_;
};

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

/// "1,3,5" rendering of a mask; "{}" for the empty set.
inline std::string format_set(Mask m) {
  if (m == 0) return "{}";
  std::string s;
  for (int e : elements_of(m)) {
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  return s;
}

inline int intersection_size(const Subset& a, const Subset& b) {
  if (a.ground() != b.ground()) throw DomainError("intersection_size: ground sizes differ");
  return popcount(a.bits() & b.bits());
}

/// A k-uniform family over [n], stored strictly increasing by mask value.
class UniformFamily {
 public:
  UniformFamily(GroundSize n, int k) : n_(n), k_(k) { check_k(); }

  UniformFamily(GroundSize n, int k, std::vector<Mask> sets) : n_(n), k_(k), sets_(std::move(sets)) {
    check_k();
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    const Mask full = n.full_mask();
    for (Mask m : sets_) {
      if (m & ~full) throw DomainError("family member " + format_set(m) + " exceeds ground set");
      if (popcount(m) != k)
        throw DomainError("family member " + format_set(m) + " is not a " + std::to_string(k) + "-set");
    }
  }

  static UniformFamily of(GroundSize n, int k, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Mask> masks;
    for (const auto& s : sets) masks.push_back(Subset::of(n, s).bits());
    return UniformFamily(n, k, std::move(masks));
  }

  GroundSize ground() const noexcept { return n_; }
  int n() const noexcept { return n_.value(); }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  std::span<const Mask> sets() const noexcept { return sets_; }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  Subset at(std::size_t i) const { return Subset(n_, sets_.at(i)); }

  bool contains(Mask m) const { return std::binary_search(sets_.begin(), sets_.end(), m); }
  bool contains(const Subset& s) const { return s.ground() == n_ && contains(s.bits()); }

  bool is_subfamily_of(const UniformFamily& other) const {
    return n_ == other.n_ && k_ == other.k_ &&
           std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end());
  }

  friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

 private:
  void check_k() const {
    if (k_ < 0 || k_ > n_.value())
      throw DomainError("uniformity k = " + std::to_string(k_) + " outside [0, " +
                        std::to_string(n_.value()) + "]");
  }

  GroundSize n_;
  int k_;
  std::vector<Mask> sets_;
};

/// Calls visit(mask) for every k-subset of [n] in increasing mask order.
template <class Visit>
void for_each_ksubset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(Mask{0});
    return;
  }
  const Mask full = prefix_mask(n);
  Mask x = prefix_mask(k);
  while (true) {
    visit(x);
    // Gosper's hack: next mask with the same popcount.
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    if (r == 0) return;
    x = (((r ^ x) >> 2) / c) | r;
    if (x & ~full) return;
  }
}

inline UniformFamily enumerate_ksubsets(GroundSize n, int k) {
  if (k < 0 || k > n.value())
    throw DomainError("enumerate_ksubsets: k = " + std::to_string(k) + " outside [0, n]");
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(n.value(), k).convert_to<unsigned long long>()));
  for_each_ksubset(n.value(), k, [&](Mask m) { out.push_back(m); });
  return UniformFamily(n, k, std::move(out));
}

/// Intersection of every member across all families.
inline Subset common_core(std::span<const UniformFamily> fams) {
  if (fams.empty()) throw DomainError("common_core: no families given");
  const GroundSize n = fams.front().ground();
  Mask core = n.full_mask();
  bool any = false;
  for (const auto& f : fams) {
    if (f.ground() != n) throw DomainError("common_core: ground sizes differ");
    for (Mask m : f) {
      core &= m;
      any = true;
    }
  }
  if (!any) throw DomainError("common_core: all families are empty");
  return Subset(n, core);
}

inline Subset common_core(std::initializer_list<UniformFamily> fams) {
  return common_core(std::span<const UniformFamily>(fams.begin(), fams.size()));
}

}  // namespace xfam
