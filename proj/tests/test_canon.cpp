#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hy;
using oracle::id;

namespace {

const Laurent v = Laurent::monomial(1);

std::shared_ptr<const ParabolicCosets> cosets(const std::shared_ptr<const CoxeterGroup>& g, GeneratorSet J) {
  return std::make_shared<const ParabolicCosets>(g, J, g->system().generators());
}

std::vector<GeneratorSet> all_subsets(int rank) {
  std::vector<GeneratorSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << rank); ++b) out.push_back(GeneratorSet::from_bits(b));
  return out;
}

}  // namespace

TEST(IotaExpand, Examples) {
  const auto g = oracle::b2(2, 1);
  const auto e = iota_expand<Integer>(*g, g->identity());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.at(g->identity()), Laurent(1));
  const auto s = iota_expand<Integer>(*g, g->generator(0));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at(g->generator(0)), Laurent(1));
  EXPECT_EQ(s.at(g->identity()), -(vpow(2) - vpow(-2)));

  const auto a2 = oracle::a2();
  const Laurent q = v - Laurent::monomial(-1);
  const auto st = iota_expand<Integer>(*a2, id(*a2, "12"));
  ASSERT_EQ(st.size(), 4u);
  EXPECT_EQ(st.at(id(*a2, "12")), Laurent(1));
  EXPECT_EQ(st.at(id(*a2, "1")), -q);
  EXPECT_EQ(st.at(id(*a2, "2")), -q);
  EXPECT_EQ(st.at(a2->identity()), q * q);
}

TEST(IotaExpand, SupportAndLeadingTerm) {
  for (const auto& g : {oracle::a3(), oracle::b3(2, 1)})
    for (ElementId z = 0; z < g->size(); ++z)
      for (const auto& [w, c] : iota_expand<Integer>(*g, z)) {
        EXPECT_TRUE(g->bruhat_leq(w, z));
        if (w == z) {
          EXPECT_EQ(c, Laurent(1));
        }
      }
}

TEST(HeckeShadow, A1Rho) {
  const auto g = oracle::a1();
  const HeckeShadow<Integer> sh(cosets(g, {}), trivial_module<Integer>(g->system(), {}));
  EXPECT_EQ(sh.rho(0, 1).at(0, 0), -(v - Laurent::monomial(-1)));
  EXPECT_EQ(sh.rho(1, 1), LaurentMatrix<Integer>::identity(1));
}

TEST(HeckeShadow, ScalarRhoIsRPolynomial) {
  const auto g = oracle::b2(3, 1);
  const auto c = cosets(g, {});
  const HeckeShadow<Integer> sh(c, trivial_module<Integer>(g->system(), {}));
  for (std::size_t z = 0; z < c->size(); ++z) {
    const auto R = iota_expand<Integer>(*g, c->rep(z));
    for (std::size_t x = 0; x < c->size(); ++x) {
      const auto it = R.find(c->rep(x));
      const Laurent expect = x > z ? Laurent() : it == R.end() ? Laurent() : it->second;
      EXPECT_EQ(sh.rho(x, z).at(0, 0), expect);
    }
  }
}

TEST(HeckeShadow, InvolutionOnSweep) {
  for (const auto& g : {oracle::a2(), oracle::a3(), oracle::b2(2, 1), oracle::i2(5)})
    for (GeneratorSet J : all_subsets(g->rank())) {
      const HeckeShadow<Integer> sh(cosets(g, J), sign_module<Integer>(g->system(), J));
      EXPECT_TRUE(check_involution(sh).ok());
    }
}

TEST(PiRecursion, A1) {
  const auto g = oracle::a1();
  const HeckeShadow<Integer> sh(cosets(g, {}), trivial_module<Integer>(g->system(), {}));
  const auto pi = pi_recursion(sh);
  EXPECT_EQ(pi.at(0, 1).at(0, 0), -v);
  EXPECT_EQ(pi.at(1, 1), LaurentMatrix<Integer>::identity(1));
}

TEST(PiRecursion, EqualsPMuTableEverywhere) {
  for (const auto& g : {oracle::a1(), oracle::a2(), oracle::a3(), oracle::b2(), oracle::b2(2, 1), oracle::b2(3, 1),
                        oracle::i2(5), oracle::b3(2, 1)})
    for (GeneratorSet J : all_subsets(g->rank()))
      for (const auto& m : {trivial_module<Integer>(g->system(), J), sign_module<Integer>(g->system(), J)}) {
        const auto c = cosets(g, J);
        const auto t = p_mu_table(c, m);
        const HeckeShadow<Integer> sh(c, m, 2);
        const auto pi = pi_recursion(sh, 2);
        for (std::size_t z = 0; z < c->size(); ++z)
          for (std::size_t x = 0; x <= z; ++x) EXPECT_EQ(pi.at(x, z), t.p(x, z));
        EXPECT_TRUE(check_fixed_point(sh, pi).ok());
        // matrix form of iota c = c iota
        const auto C = block_matrix(sh, pi);
        EXPECT_EQ(rho_matrix(sh) * bar(C), C);
      }
}

TEST(PiRecursion, UniquenessUnderMutation) {
  const auto g = oracle::a3();
  const auto c = cosets(g, {});
  const HeckeShadow<Integer> sh(c, trivial_module<Integer>(g->system(), {}));
  const auto pi = pi_recursion(sh);
  const std::vector<Laurent> symmetric = {Laurent(1), v + Laurent::monomial(-1), Laurent::monomial(2, 3) + Laurent::monomial(-2, 3)};
  for (std::size_t z = 0; z < c->size(); ++z)
    for (std::size_t x = 0; x < z; ++x) {
      if (!c->leq(x, z)) continue;
      for (const auto& f : symmetric) {
        auto mutated = pi;
        mutated.set(x, z, pi.at(x, z) + LaurentMatrix<Integer>::scalar(1, f));
        EXPECT_FALSE(check_fixed_point(sh, mutated).ok());
      }
    }
}

TEST(PiRecursion, RestrictsToOrderIdeals) {
  const auto g = oracle::a2();
  const auto c = cosets(g, {});
  const HeckeShadow<Integer> sh(c, trivial_module<Integer>(g->system(), {}));
  const auto pi = pi_recursion(sh);
  for (std::size_t top = 0; top < c->size(); ++top) {
    std::vector<std::size_t> ideal;
    for (std::size_t x = 0; x < c->size(); ++x)
      if (c->leq(x, top)) ideal.push_back(x);
    const RestrictedShadow<Integer> sub(sh, ideal);
    EXPECT_TRUE(check_involution(sub).ok());
    const auto sub_pi = pi_recursion(sub);
    for (std::size_t j = 0; j < ideal.size(); ++j)
      for (std::size_t i = 0; i <= j; ++i) EXPECT_EQ(sub_pi.at(i, j), pi.at(ideal[i], ideal[j]));
  }
}

TEST(PiRecursion, DetectsABrokenInvolution) {
  // A shadow whose rho does not square to 1 makes alpha fail antisymmetry.
  class Broken : public GradedShadow<Integer> {
   public:
    std::size_t size() const override { return 2; }
    bool leq(std::size_t x, std::size_t z) const override { return x <= z; }
    std::size_t block_rank() const override { return 1; }
    const LaurentMatrix<Integer>& rho(std::size_t x, std::size_t z) const override {
      return x == z ? one_ : x < z ? off_ : zero_;
    }

   private:
    LaurentMatrix<Integer> one_ = LaurentMatrix<Integer>::identity(1);
    LaurentMatrix<Integer> zero_ = LaurentMatrix<Integer>(1, 1);
    LaurentMatrix<Integer> off_ = LaurentMatrix<Integer>::scalar(1, Laurent(1) + v);
  };
  const Broken b;
  EXPECT_FALSE(check_involution(b).ok());
  EXPECT_THROW(pi_recursion(b), std::logic_error);
}
