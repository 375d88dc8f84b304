#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xfam/constructions.hpp"
#include "xfam/genset.hpp"

using namespace xfam;
using oracle::mask_of;

namespace {

/// k-level of the upset generated by `gens`, by brute force.
UniformFamily from_generators(int n, int k, const std::vector<Mask>& gens) {
  std::vector<Mask> out;
  for (Mask m : oracle::ksubsets(n, k))
    for (Mask e : gens)
      if ((m & e) == e) {
        out.push_back(m);
        break;
      }
  return UniformFamily(GroundSize(n), k, out);
}

/// Minimal E whose every k-superset is in A, by scanning all subsets of [n].
std::vector<Mask> brute_generators(const UniformFamily& a) {
  const int n = a.n(), k = a.k();
  std::vector<Mask> upset;
  for (Mask e = 0; e < (Mask{1} << n); ++e) {
    if (popcount(e) > k) continue;
    bool all = true;
    for (Mask m : oracle::ksubsets(n, k))
      if ((m & e) == e && !a.contains(m)) {
        all = false;
        break;
      }
    if (all) upset.push_back(e);
  }
  std::vector<Mask> gens;
  for (Mask e : upset) {
    bool minimal = true;
    for (Mask f : upset)
      if (f != e && (f & e) == f) minimal = false;
    if (minimal) gens.push_back(e);
  }
  return gens;
}

}  // namespace

TEST(CanonicalGenerators, Examples) {
  EXPECT_EQ(canonical_generators(build(FamilySpec::star(7, 3))).gens, (std::vector<Mask>{mask_of({1, 2})}));

  const UniformFamily three_of_four = build(FamilySpec::frankl(8, 4, 1, 2));
  const auto g = canonical_generators(three_of_four);
  EXPECT_EQ(g.gens, oracle::ksubsets(4, 3));

  EXPECT_EQ(canonical_generators(UniformFamily::of(GroundSize(5), 3, {{1, 2, 3}})).gens,
            (std::vector<Mask>{mask_of({1, 2, 3})}));
  EXPECT_THROW(canonical_generators(UniformFamily(GroundSize(5), 3)), DomainError);
}

TEST(CanonicalGenerators, MatchBruteForceOnRandomFamilies) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Mask> pick;
    for (Mask m : oracle::ksubsets(n, k))
      if (rng() % 2) pick.push_back(m);
    if (pick.empty()) continue;
    const UniformFamily a(GroundSize(n), k, pick);
    const auto g = canonical_generators(a);
    EXPECT_EQ(g.gens, brute_generators(a));
    EXPECT_TRUE(is_antichain(g.gens));
    EXPECT_EQ(upset_level(g), a);
  }
}

TEST(SPlus, Examples) {
  EXPECT_EQ(s_plus(mask_of({1, 2, 5})), 5);
  const std::vector<Mask> two = {mask_of({1, 2}), mask_of({1, 3, 4})};
  EXPECT_EQ(s_plus(std::span<const Mask>(two)), 4);
  EXPECT_EQ(s_plus(canonical_generators(build(FamilySpec::star(6, 3)))), 2);
  EXPECT_THROW(s_plus(Mask{0}), DomainError);
}

TEST(Slice, Examples) {
  const auto g4 = canonical_generators(build(FamilySpec::frankl(8, 4, 1, 2)));
  const SliceView v = slice(g4);
  EXPECT_EQ(v.s_plus, 4);
  ASSERT_EQ(v.slices.size(), 1U);
  EXPECT_EQ(v.slices.at(3), (std::vector<Mask>{mask_of({1, 2, 4}), mask_of({1, 3, 4}), mask_of({2, 3, 4})}));

  const SliceView v2 = slice(canonical_generators(build(FamilySpec::star(6, 3))));
  EXPECT_EQ(v2.s_plus, 2);
  EXPECT_EQ(v2.slices.at(2), (std::vector<Mask>{mask_of({1, 2})}));

  const auto g3 = canonical_generators(from_generators(7, 3, {mask_of({1, 2, 3}), mask_of({1, 2, 4})}));
  const SliceView v3 = slice(g3);
  EXPECT_EQ(v3.s_plus, 4);
  EXPECT_EQ(v3.slices.at(3), (std::vector<Mask>{mask_of({1, 2, 4})}));
}

TEST(ExpandD, Examples) {
  const UniformFamily d = expand_D(Subset::of(GroundSize(6), {1, 3}), 3);
  EXPECT_EQ(d, UniformFamily::of(GroundSize(6), 3, {{1, 3, 4}, {1, 3, 5}, {1, 3, 6}}));
  EXPECT_EQ(expand_D(Subset::of(GroundSize(6), {1, 2}), 2), UniformFamily::of(GroundSize(6), 2, {{1, 2}}));
  const UniformFamily d3 = expand_D(Subset::of(GroundSize(7), {2, 4}), 4);
  EXPECT_EQ(d3.size(), 3U);
  EXPECT_EQ(d3.size(), oracle::count_where(7, 4, [](Mask m) { return (m & 0xFU) == mask_of({2, 4}); }));
}

TEST(ExpandD, SizeIsBinomialOfTail) {
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      for (Mask e = 1; e < (Mask{1} << n); ++e) {
        if (popcount(e) > k) continue;
        const UniformFamily d = expand_D(Subset(GroundSize(n), e), k);
        ASSERT_EQ(Int(d.size()), binomial(n - s_plus(e), k - popcount(e)));
      }
}

TEST(Decomposition, Examples) {
  const UniformFamily star = build(FamilySpec::star(7, 3));
  EXPECT_TRUE(verify_decomposition(star, canonical_generators(star)));
  const UniformFamily f = build(FamilySpec::frankl(8, 4, 1, 2));
  EXPECT_TRUE(verify_decomposition(f, canonical_generators(f)));
}

TEST(Decomposition, HoldsForRandomCompressedIntersectingFamilies) {
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 60) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 2);
    if (t > k) continue;
    auto pair = oracle::random_maximal_compressed_pair(rng, n, k, k, t);
    if (!pair) continue;
    ++tested;
    for (const UniformFamily* f : {&pair->a, &pair->b}) {
      ASSERT_TRUE(is_left_compressed(*f));
      EXPECT_TRUE(verify_decomposition(*f, canonical_generators(*f)));
    }
  }
}

TEST(PushTransforms, SizesMatchClosedFormsOnGeneratorExample) {
  const int n = 17, k = 5;
  const UniformFamily a = from_generators(n, k, {mask_of({1, 2, 3}), mask_of({1, 2, 4}), mask_of({1, 2, 5})});
  const UniformFamily b = from_generators(n, k, {mask_of({1, 2}), mask_of({1, 3, 4, 5}), mask_of({2, 3, 4, 5})});
  ASSERT_TRUE(is_cross_t(a, b, 2));
  EXPECT_EQ(canonical_generators(a).gens.size(), 3U);
  EXPECT_EQ(canonical_generators(b).gens.size(), 3U);
  const PushResult r = push_transforms(a, b, 3, 2);
  EXPECT_EQ(r.s, 5);
  EXPECT_EQ(r.g_star_a, 1U);
  EXPECT_EQ(r.g_star_b, 2U);
  EXPECT_EQ(Int(r.a1.size()), r.size_a1_formula);
  EXPECT_EQ(Int(r.b1.size()), r.size_b1_formula);
  EXPECT_EQ(r.size_a1_formula, Int(a.size()) + binomial(12, 3));
  EXPECT_EQ(r.size_b1_formula, Int(b.size()) - 2 * binomial(12, 1));
  EXPECT_TRUE(is_cross_t(r.a1, r.b1, 2));
}

TEST(PushTransforms, StarBoundaryKeepsFormulasConsistent) {
  const UniformFamily sa = build(FamilySpec::star(8, 3)), sb = build(FamilySpec::star(8, 4));
  const PushResult r = push_transforms(sa, sb, 2, 2);
  EXPECT_EQ(r.s, 2);
  EXPECT_EQ(Int(r.a1.size()), r.size_a1_formula);
  EXPECT_EQ(Int(r.b1.size()), r.size_b1_formula);
}

TEST(PushTransforms, EmptySliceIsPreconditionError) {
  const UniformFamily sa = build(FamilySpec::star(8, 3));
  EXPECT_THROW(push_transforms(sa, sa, 3, 2), PreconditionError);
}

TEST(PullTransforms, InverseDirectionKeepsCrossProperty) {
  const int n = 12, k = 4;
  const UniformFamily a = from_generators(n, k, {mask_of({1, 2, 3}), mask_of({1, 2, 4})});
  const UniformFamily b = from_generators(n, k, {mask_of({1, 2}), mask_of({1, 3, 4}), mask_of({2, 3, 4})});
  ASSERT_TRUE(is_cross_t(a, b, 2));
  auto [a2, b2] = pull_transforms(a, b, 3, 2);
  EXPECT_TRUE(is_cross_t(a2, b2, 2));
  EXPECT_LT(a2.size(), a.size());
  EXPECT_GT(b2.size(), b.size());
}

TEST(SliceDuality, HoldsOnRandomMaximalCompressedPairs) {
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 60) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3), l = 2 + static_cast<int>(rng() % 3);
    auto pair = oracle::random_maximal_compressed_pair(rng, n, k, l, 2);
    if (!pair) continue;
    ++tested;
    EXPECT_EQ(check_slice_duality(canonical_generators(pair->a), canonical_generators(pair->b), 2), "");
  }
}

TEST(Sperner, Examples) {
  const auto full = oracle::ksubsets(4, 2);
  EXPECT_EQ(sperner_shadow_ratio(full, 5, 3), Rat(2, 3));
  const std::vector<Mask> one = {mask_of({1, 2})};
  EXPECT_EQ(sperner_shadow_ratio(one, 5, 3), Rat(2));
  const std::vector<Mask> single = {mask_of({1})};
  EXPECT_EQ(sperner_shadow_ratio(single, 4, 2), Rat(2));
  EXPECT_EQ(sperner_bound(4, 2), Rat(1));
  EXPECT_THROW(sperner_shadow_ratio(std::vector<Mask>{}, 4, 2), DomainError);
}

TEST(Sperner, BoundHoldsForEverySubfamilyOfSmallLevels) {
  for (int s = 3; s <= 6; ++s)
    for (int i = 2; i <= s - 1; ++i) {
      const auto level = oracle::ksubsets(s - 1, i - 1);
      if (level.size() > 12) continue;
      for (std::uint32_t pick = 1; pick < (1U << level.size()); ++pick) {
        std::vector<Mask> g;
        for (std::size_t x = 0; x < level.size(); ++x)
          if (pick >> x & 1U) g.push_back(level[x]);
        ASSERT_GE(sperner_shadow_ratio(g, s, i), sperner_bound(s, i));
      }
    }
}

TEST(GeneratorLaws, GeneratorsOfIntersectingFamiliesAreIntersecting) {
  std::mt19937_64 rng(4);
  int tested = 0;
  while (tested < 60) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 2 * k - 1 + static_cast<int>(rng() % 3);
    if (n > 9) continue;
    auto pair = oracle::random_maximal_compressed_pair(rng, n, k, k, 2);
    if (!pair) continue;
    std::vector<Mask> common;
    for (Mask m : pair->a)
      if (pair->b.contains(m)) common.push_back(m);
    if (common.empty()) continue;
    const UniformFamily f(GroundSize(n), k, common);
    if (!is_left_compressed(f)) continue;
    ++tested;
    EXPECT_TRUE(is_t_intersecting(canonical_generators(f).gens, 2));
  }
}
