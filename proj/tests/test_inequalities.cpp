#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "xfam/inequalities.hpp"

using namespace xfam;

namespace {

Rat claim_value(const std::string& name, const ParamPoint& p) {
  for (const auto& c : proof_sign_claims())
    if (c.name == name) {
      EXPECT_TRUE(c.applies(p)) << name;
      return c.value(p);
    }
  ADD_FAILURE() << "no claim named " << name;
  return 0;
}

Grid small_grid() {
  Grid g;
  g.kmin = 3;
  g.kmax = 6;
  g.lmin = 3;
  g.lmax = 6;
  g.nwindow = 5;
  return g;
}

}  // namespace

TEST(FValue, ExampleInBothForms) {
  EXPECT_EQ(f_value(20, 5, 6, 3), Rat(7, 20));
  EXPECT_EQ(f_value_binomial(20, 5, 6, 3), Rat(7, 20));
  EXPECT_EQ(oracle::f_sum(20, 5, 6, 3), Rat(7, 20));
}

TEST(FValue, ClosedFormEqualsBinomialFormOnGrid) {
  for (long long k = 3; k <= 12; ++k)
    for (long long s = k + 1; s <= 2 * k - 1; ++s)
      for (long long i = 3; i <= std::min(s - 1, k); ++i)
        for (long long n = threshold_n(k); n <= threshold_n(k) + 15; ++n) {
          ASSERT_EQ(f_value(n, k, s, i), oracle::f_sum(n, k, s, i)) << n << " " << k << " " << s << " " << i;
          ASSERT_EQ(f_value_binomial(n, k, s, i), oracle::f_sum(n, k, s, i));
        }
  // Boundary i = k, s = k + 1 and the smallest slice s = 4, i = 3.
  EXPECT_EQ(f_value(30, 6, 7, 6), oracle::f_sum(30, 6, 7, 6));
  EXPECT_EQ(f_value(15, 3, 4, 3), oracle::f_sum(15, 3, 4, 3));
}

TEST(FValue, ZeroDenominatorNamesTheFactor) {
  try {
    f_value(5, 3, 6, 3);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(n-s+1)"), std::string::npos);
  }
}

TEST(SingleFactor, Examples) {
  const Lemma31Result r = lemma31_check(20, 5, 6, 3);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.f, Rat(7, 20));
  EXPECT_EQ(r.ratio, Rat(1, 4));
  EXPECT_TRUE(lemma31_check(17, 5, 6, 5).holds());
  EXPECT_TRUE(lemma31_check(17, 5, 6, 5).agree());
  EXPECT_THROW(lemma31_check(16, 5, 6, 3), PreconditionError);
  EXPECT_THROW(lemma31_check(20, 5, 5, 3), PreconditionError);
}

TEST(SingleFactor, PolynomialMatchesPointValues) {
  for (long long k = 3; k <= 8; ++k)
    for (long long s = k + 1; s <= 2 * k - 1; ++s)
      for (long long i = std::max(s + 2 - k, 3LL); i <= std::min(s - 1, k); ++i) {
        const Poly p = lemma31_polynomial(k, s, i);
        for (long long n = 10; n <= 60; n += 7) EXPECT_EQ(p(Int(n)), lemma31_polynomial_value(n, k, s, i));
      }
}

TEST(SingleFactor, SweepPassesWithMinimumSlackReported) {
  Grid g;
  g.kmin = 3;
  g.kmax = 8;
  g.nwindow = 10;
  const SweepReport rep = lemma31_sweep(g);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.passed, 0U);
  bool slack_note = false;
  for (const auto& n : rep.notes) slack_note = slack_note || n.rfind("minimum slack", 0) == 0;
  EXPECT_TRUE(slack_note);
}

TEST(TValue, Example) {
  EXPECT_EQ(T_value(24, 7, 7, 7, 4), Rat(2777040, 2006208));
  EXPECT_EQ(T_value(24, 7, 7, 7, 4), oracle::product_ratio(24, 7, 7, 7, 4));
  EXPECT_GT(T_value(24, 7, 7, 7, 4), 1);
  EXPECT_TRUE(product_inequality(24, 7, 7, 7, 4).holds());
}

TEST(TValue, AgreesWithBinomialRatioWhereDefined) {
  for (long long k = 3; k <= 8; ++k)
    for (long long l = 3; l <= 8; ++l)
      for (long long s = 4; s <= k + l - 2; ++s)
        for (long long i = std::max(s + 2 - l, 3LL); i <= std::min(k, s - 1); ++i)
          for (long long n = threshold_n(std::max(k, l)); n <= threshold_n(std::max(k, l)) + 4; ++n) {
            const Rat direct = oracle::product_ratio(n, k, l, s, i);
            ASSERT_EQ(product_inequality(n, k, l, s, i).ratio(), direct);
            try {
              ASSERT_EQ(T_value(n, s, k, l, i), direct) << n << " " << k << " " << l << " " << s << " " << i;
            } catch (const DomainError&) {
            }
          }
}

TEST(TValue, NonpositiveFactorIsDomainError) { EXPECT_THROW(T_value(5, 6, 3, 3, 3), DomainError); }

TEST(ProductSweep, SmallGridHasNoFailuresOutsideExceptions) {
  const SweepReport rep = lemma32_sweep(small_grid());
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.recorded, 0U);
  for (const auto& row : rep.rows)
    if (row.check == "exception") {
      EXPECT_FALSE(row.asserted);
      EXPECT_TRUE(is_exception_point(*row.s, *row.i));
    }
}

TEST(ProductSweep, IsDeterministic) {
  std::ostringstream a, b;
  write_csv(a, lemma32_sweep(small_grid()));
  write_csv(b, lemma32_sweep(small_grid()));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("check,n,k,l,s,i,value_num,value_den,pass\n", 0), 0U);
}

TEST(SignClaims, Examples) {
  EXPECT_GT(case1_g(34, 8, 10, 10, 5), 0);
  EXPECT_GT(claim_value("case1:g", {34, 10, 10, 8, 5}), 0);
  EXPECT_GT(claim_value("case1:h", {34, 10, 10, 8, 5}), 0);

  const ParamPoint s6{21, 6, 6, 6, 3};
  EXPECT_GT(claim_value("case3:s6-bound1", s6), 0);
  EXPECT_GT(claim_value("case3:s6-bound2", s6), 0);
  EXPECT_GT(claim_value("case3:s6-denominator-gap", s6), 0);

  const ParamPoint c2{24, 7, 7, 7, 4};
  EXPECT_GT(claim_value("case2:p(l>=k)", c2), 0);
  EXPECT_GT(claim_value("case2:q(l>=k)", c2), 0);
}

TEST(SignClaims, HAndGAreExchangedUnderSwap) {
  for (long long n = 30; n <= 40; ++n)
    for (long long s = 8; s <= 10; ++s)
      for (long long i = 5; i <= s - 3; ++i)
        EXPECT_EQ(case1_h(n, s, 9, 10, i), case1_g(n, s, 10, 9, s + 2 - i));
}

TEST(SignClaims, SweepOnSmallGridIsPositive) {
  Grid g;
  g.kmin = 3;
  g.kmax = 8;
  g.lmin = 3;
  g.lmax = 8;
  g.nwindow = 5;
  const SweepReport rep = proof_polynomial_signs(g);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.passed, 0U);
}

TEST(RatioConstants, Examples) {
  const auto& c = ratio_constants();
  ASSERT_EQ(c.size(), 4U);
  EXPECT_EQ(ratio_constant_value(c[0], 17, 5), Rat(1, 5));
  EXPECT_LT(ratio_constant_value(c[0], 17, 5), Rat(3, 10));
  EXPECT_EQ(ratio_constant_value(c[0], threshold_n(2), 2), 0);
  EXPECT_EQ(ratio_constant_value(c[2], 14, 4), Rat(1, 66));
  EXPECT_LT(Rat(1, 66), Rat(9, 100));
}

TEST(RatioConstants, SweepPassesUpTo40) {
  const SweepReport rep = ratio_constants_check(40, 40);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.passed, 4U * 39U * 2U);
}

TEST(RatioConstants, MatchDirectBinomialRatios) {
  const auto& C = oracle::pascal();
  for (const auto& rc : ratio_constants())
    for (long long m = 2; m <= 30; ++m)
      for (long long n = threshold_n(m); n <= threshold_n(m) + 10; ++n)
        ASSERT_EQ(ratio_constant_value(rc, n, m),
                  Rat(C(n - rc.top_shift, m - rc.bottom_shift)) / Rat(C(n - 2, m - 2)));
}

TEST(Reports, CsvRowsCarryValuesAndFlags) {
  SweepReport rep;
  rep.add({"x", 10, 3, std::nullopt, 4, 3, Rat(3, 4), true, true});
  rep.add({"y", std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, false, false});
  std::ostringstream os;
  write_csv(os, rep);
  EXPECT_EQ(os.str(), "check,n,k,l,s,i,value_num,value_den,pass\nx,10,3,,4,3,3,4,1\ny,,,,,,,,0\n");
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.recorded, 1U);
}
