#pragma once

// Shifting. For i < j, s_ij replaces j by i in a member A when j ∈ A, i ∉ A
// and the shifted set is not already in the family. A family is
// left-compressed when every s_ij fixes it.

#include <string>
#include <utility>
#include <vector>

#include "xfam/sets.hpp"

namespace xfam {

class ShiftIndex {
 public:
  ShiftIndex(int i, int j) : i_(i), j_(j) {
    if (i < 1 || i >= j || j > 64)
      throw DomainError("shift index needs 1 <= i < j <= 64 (got i=" + std::to_string(i) +
                        " j=" + std::to_string(j) + ")");
  }
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_, j_;
};

namespace detail {

/// Image of `m` under s_ij ignoring the membership guard.
constexpr Mask raw_shift(Mask m, int i, int j) {
  if ((m & element_bit(j)) && !(m & element_bit(i))) return (m & ~element_bit(j)) | element_bit(i);
  return m;
}

inline void check_shift_range(const UniformFamily& f, const ShiftIndex& ij) {
  if (ij.j() > f.n()) throw DomainError("shift index j exceeds n");
}

}  // namespace detail

inline Subset shift_set(const Subset& a, const ShiftIndex& ij, const UniformFamily& context) {
  if (!context.contains(a)) throw DomainError("shift_set: set " + format_set(a.bits()) + " is not in the family");
  detail::check_shift_range(context, ij);
  const Mask target = detail::raw_shift(a.bits(), ij.i(), ij.j());
  if (target != a.bits() && !context.contains(target)) return Subset(a.ground(), target);
  return a;
}

inline UniformFamily shift_family(const UniformFamily& f, const ShiftIndex& ij) {
  detail::check_shift_range(f, ij);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f) {
    const Mask target = detail::raw_shift(m, ij.i(), ij.j());
    out.push_back(target != m && !f.contains(target) ? target : m);
  }
  return UniformFamily(f.ground(), f.k(), std::move(out));
}

/// True when every elementary shift image of every member is again a member.
inline bool is_left_compressed(const UniformFamily& f) {
  const int n = f.n();
  for (Mask m : f)
    for (int j = 2; j <= n; ++j) {
      if (!(m & element_bit(j))) continue;
      for (int i = 1; i < j; ++i)
        if (!(m & element_bit(i)) && !f.contains(detail::raw_shift(m, i, j))) return false;
    }
  return true;
}

/// Sweeps s_ij in lexicographic (i, j) order, restarting after any change,
/// until a whole sweep leaves the family fixed.
inline UniformFamily compress_family(UniformFamily f) {
  const int n = f.n();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n && !changed; ++i)
      for (int j = i + 1; j <= n && !changed; ++j) {
        UniformFamily g = shift_family(f, ShiftIndex(i, j));
        if (g != f) {
          f = std::move(g);
          changed = true;
        }
      }
  }
  return f;
}

/// Applies the same s_ij to both families until both are left-compressed.
/// Sizes and the cross-t-intersecting property are preserved.
inline std::pair<UniformFamily, UniformFamily> compress_pair(UniformFamily a, UniformFamily b) {
  if (a.ground() != b.ground()) throw DomainError("compress_pair: ground sizes differ");
  const int n = a.n();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n && !changed; ++i)
      for (int j = i + 1; j <= n && !changed; ++j) {
        const ShiftIndex ij(i, j);
        UniformFamily a2 = shift_family(a, ij);
        UniformFamily b2 = shift_family(b, ij);
        if (a2 != a || b2 != b) {
          a = std::move(a2);
          b = std::move(b2);
          changed = true;
        }
      }
  }
  return {std::move(a), std::move(b)};
}

/// Sum over members of the sum of their elements; strictly drops on every
/// non-identity shift.
inline long long shift_potential(const UniformFamily& f) {
  long long total = 0;
  for (Mask m : f)
    for (int e : elements_of(m)) total += e;
  return total;
}

}  // namespace xfam
