#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hy;

namespace {

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

}  // namespace

TEST(ClassicalKL, S3) {
  const auto r = oracle::compare_with_classical(oracle::a2(), oracle::PermModel::symmetric(3));
  EXPECT_TRUE(r.mismatches.empty()) << joined(r.mismatches);
  EXPECT_EQ(r.pairs, 19u);
  EXPECT_EQ(r.two_term, 0u);
}

TEST(ClassicalKL, S4IncludingOnePlusQ) {
  const auto r = oracle::compare_with_classical(oracle::a3(), oracle::PermModel::symmetric(4));
  EXPECT_TRUE(r.mismatches.empty()) << joined(r.mismatches);
  // P = 1 + q exactly below 3412 = s2s1s3s2 (x <= s2) and 4231 = s1s2s3s2s1 (x <= s1s3).
  EXPECT_EQ(r.two_term, 6u);
}

TEST(ClassicalKL, EqualParameterB2AndB3) {
  for (int n : {2, 3}) {
    const auto r = oracle::compare_with_classical(n == 2 ? oracle::b2() : oracle::b3(), oracle::PermModel::hyperoctahedral(n));
    EXPECT_TRUE(r.mismatches.empty()) << joined(r.mismatches);
  }
}

TEST(ClassicalKL, TransformPointsIntoPositiveDegrees) {
  // The variant v^{l(x)-l(z)} P(v^2) lands in negative degrees and must not match.
  const auto g = oracle::a2();
  const auto t = p_mu_table(g, trivial_module<Integer>(g->system(), GeneratorSet{}));
  EXPECT_NE(t.p(0, 1).at(0, 0), oracle::from_classical({1}, 1).bar());
  EXPECT_EQ(t.p(0, 1).at(0, 0), oracle::from_classical({1}, 1));
}
