#include <gtest/gtest.h>

#include <random>

#include "xfam/poly.hpp"

using namespace xfam;

namespace {

Poly from(std::initializer_list<long long> low_to_high) {
  Poly p, x = Poly::linear(1, 0), power = 1;
  for (long long c : low_to_high) {
    p = p + Poly(c) * power;
    power = power * x;
  }
  return p;
}

}  // namespace

TEST(Poly, ArithmeticAndEvaluation) {
  const Poly p = from({-6, 1, 1});  // n^2 + n - 6 = (n+3)(n-2)
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Int(2)), 0);
  EXPECT_EQ(p(Int(5)), 24);
  EXPECT_EQ((Poly::linear(1, 3) * Poly::linear(1, -2)).str(), p.str());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.str(), "n^2 + n - 6");
  EXPECT_EQ(from({0, -1}).str(), "-n");
}

TEST(Poly, ShiftMatchesEvaluationAtRandomPoints) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<long long> c(1 + rng() % 6);
    for (auto& x : c) x = static_cast<long long>(rng() % 41) - 20;
    Poly p;
    Poly power = 1;
    for (long long v : c) {
      p = p + Poly(v) * power;
      power = power * Poly::linear(1, 0);
    }
    const long long x0 = static_cast<long long>(rng() % 61) - 30;
    const Poly q = p.shifted(x0);
    for (long long m = -5; m <= 5; ++m) EXPECT_EQ(q(Int(m)), p(Int(x0 + m)));
  }
}

TEST(TailCertificate, PositiveTailIsCertified) {
  const auto c = certify_from(from({-6, 1, 1}), 3);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.shift_point, 3);
}

TEST(TailCertificate, FindsShiftPointAfterSignChanges) {
  // (n-10)^2 + 1 has negative coefficients but is positive everywhere.
  const auto c = certify_from(from({101, -20, 1}), 0);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.shift_point, 10);
}

TEST(TailCertificate, RejectsRootsAndNegativeLeadingTerms) {
  EXPECT_FALSE(certify_from(from({-6, 1, 1}), 0).ok);
  EXPECT_TRUE(certify_from(from({-6, 1, 1}), 2, false).ok);
  EXPECT_FALSE(certify_from(from({5, -1}), 0).ok);
  EXPECT_FALSE(certify_from(Poly(), 0).ok);
  EXPECT_TRUE(certify_from(Poly(), 0, false).ok);
}
