#include <gtest/gtest.h>

#include "oracles.hpp"
#include "xfam/constructions.hpp"

using namespace xfam;

namespace {

std::size_t enumerated(const FamilySpec& f) {
  return oracle::count_where(f.n, f.k, [&](Mask m) { return is_member(f, m); });
}

int pop(Mask m) { return oracle::meet(m, m); }

/// Independent membership predicates written from the family definitions.
bool oracle_member(const FamilySpec& f, Mask m) {
  const Mask two = 3U;
  const Mask prefix = f.s >= 64 ? ~Mask{0} : (Mask{1} << f.s) - 1;
  switch (f.kind) {
    case FamilyKind::Star: return (m & f.core) == f.core;
    case FamilyKind::Frankl: return pop(m & ((Mask{1} << (f.t + 2 * f.r)) - 1)) >= f.t + f.r;
    case FamilyKind::A: return (m & prefix) == prefix;
    case FamilyKind::B: return pop(m & prefix) >= 2;
    case FamilyKind::H: return (m & two) == two || pop(m & prefix) >= f.s - 1;
    case FamilyKind::I: return (m & two) == two && pop(m & prefix) >= 3;
  }
  return false;
}

}  // namespace

TEST(Build, ExampleSizes) {
  EXPECT_EQ(build(FamilySpec::star(10, 4)).size(), 28U);
  EXPECT_EQ(build(FamilySpec::frankl(10, 4, 1)).size(), 25U);
  EXPECT_EQ(build(FamilySpec::h(8, 4, 3)).size(), 35U);
  EXPECT_EQ(enumerated(FamilySpec::h(8, 4, 3)), 35U);
}

TEST(Build, OutOfRangeSpecsAreDomainErrors) {
  EXPECT_THROW(build(FamilySpec::frankl(5, 3, 2)), DomainError);
  EXPECT_THROW(build(FamilySpec::h(10, 3, 5)), DomainError);
  EXPECT_THROW(build(FamilySpec::i(10, 3, 2)), DomainError);
  EXPECT_THROW(build(FamilySpec::star(10, 3, oracle::mask_of({1, 2, 3}))), DomainError);
  EXPECT_THROW(build(FamilySpec::star(10, 11)), DomainError);
}

TEST(SizeFormula, Examples) {
  EXPECT_EQ(size_formula(FamilySpec::star(11, 3)), 9);
  EXPECT_EQ(size_formula(FamilySpec::i(11, 3, 3)), 1);
  EXPECT_EQ(build(FamilySpec::i(11, 3, 3)), UniformFamily::of(GroundSize(11), 3, {{1, 2, 3}}));
  EXPECT_EQ(size_formula(FamilySpec::frankl(10, 4, 1)), 25);
  EXPECT_EQ(size_formula(FamilySpec::frankl(10, 4, 1)),
            binomial(4, 3) * binomial(6, 1) + binomial(4, 4) * binomial(6, 0));
}

TEST(SizeFormula, MatchesEnumerationForAllKindsUpTo14) {
  for (int n = 4; n <= 14; ++n)
    for (int k = 2; k <= std::min(n, 6); ++k) {
      std::vector<FamilySpec> specs = {FamilySpec::star(n, k), FamilySpec::star(n, k, oracle::mask_of({2, n}))};
      for (int r = 0; 2 + 2 * r <= n; ++r) specs.push_back(FamilySpec::frankl(n, k, r));
      for (int t = 1; t <= 3; ++t)
        if (t + 2 <= n) specs.push_back(FamilySpec::frankl(n, k, 1, t));
      for (int s = 3; s <= n; ++s) {
        specs.push_back(FamilySpec::a(n, k, s));
        specs.push_back(FamilySpec::b(n, k, s));
        specs.push_back(FamilySpec::i(n, k, s));
        if (s <= k + 1) specs.push_back(FamilySpec::h(n, k, s));
      }
      for (const auto& f : specs) {
        const std::size_t count = oracle::count_where(n, k, [&](Mask m) { return oracle_member(f, m); });
        ASSERT_EQ(size_formula(f), Int(count)) << to_string(f.kind) << " n=" << n << " k=" << k << " s=" << f.s;
        ASSERT_EQ(build(f).size(), count);
      }
    }
}

TEST(Products, Examples) {
  EXPECT_EQ(product_f(11, 3, 3, 0), 81);
  EXPECT_EQ(product_f(10, 4, 4, 1), 625);
  EXPECT_EQ(product_f(12, 3, 4, 1), Int(build(FamilySpec::frankl(12, 3, 1)).size()) * build(FamilySpec::frankl(12, 4, 1)).size());
  EXPECT_EQ(product_h(11, 3, 3, 3), size_formula(FamilySpec::b(11, 3, 3)) * 1);
  EXPECT_EQ(build(FamilySpec::h(11, 3, 3)), build(FamilySpec::b(11, 3, 3)));
  EXPECT_EQ(build(FamilySpec::i(11, 4, 3)), build(FamilySpec::a(11, 4, 3)));
  EXPECT_EQ(product_h(20, 5, 6, 3),
            Int(enumerated(FamilySpec::h(20, 5, 3))) * Int(enumerated(FamilySpec::i(20, 6, 3))));
  EXPECT_EQ(product_h(9, 3, 4, 3), Int(enumerated(FamilySpec::h(9, 3, 3))) * Int(enumerated(FamilySpec::i(9, 4, 3))));
}

TEST(CandidatePairs, AreCrossTwoIntersectingAndNontrivial) {
  for (int n = 8; n <= 12; ++n)
    for (int k = 3; k <= 5; ++k)
      for (int l = 3; l <= 5; ++l) {
        const CrossParams p(GroundSize(n), k, l, 2);
        for (int s = 3; s <= std::min(k, l) + 1; ++s) {
          const UniformFamily h = build(FamilySpec::h(n, k, s)), i = build(FamilySpec::i(n, l, s));
          if (i.empty()) continue;
          EXPECT_TRUE(is_cross_t(h, i, 2)) << "n=" << n << " k=" << k << " l=" << l << " s=" << s;
          EXPECT_FALSE(is_trivial_pair(ClosedPair{p, h, i}));
        }
        const UniformFamily fa = build(FamilySpec::frankl(n, k, 1)), fb = build(FamilySpec::frankl(n, l, 1));
        EXPECT_TRUE(is_cross_t(fa, fb, 2));
        EXPECT_FALSE(is_trivial_pair(ClosedPair{p, fa, fb}));
      }
}

TEST(HFormulaDiagnostic, FlagsTheUnboundSymbol) {
  const HFormulaDiagnostic d = h_formula_diagnostic(12, 3, 3, 3);
  EXPECT_EQ(d.exact, product_h(12, 3, 3, 3));
  EXPECT_EQ(d.message.rfind("INCONSISTENT", 0), 0U);
  EXPECT_EQ(d.tried.size(), 3U);
  EXPECT_NE(std::find(d.matching.begin(), d.matching.end(), "t=2"), d.matching.end());

  const HFormulaDiagnostic d5 = h_formula_diagnostic(20, 6, 6, 5);
  EXPECT_EQ(d5.matching, (std::vector<std::string>{"t=2"}));
}

TEST(Kinds, ParseAndPrint) {
  for (auto k : {FamilyKind::Star, FamilyKind::Frankl, FamilyKind::A, FamilyKind::B, FamilyKind::H, FamilyKind::I})
    EXPECT_EQ(parse_kind(to_string(k)), k);
  EXPECT_EQ(parse_kind("FRANKL"), FamilyKind::Frankl);
  EXPECT_FALSE(parse_kind("triangle").has_value());
}
