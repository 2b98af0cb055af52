#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace hy;
using oracle::id;

namespace {

std::vector<std::string> names(const CoxeterGroup& g, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId w : ids) out.push_back(g.name(w));
  return out;
}

/// Library element -> model element, through the canonical word.
std::size_t to_model(const CoxeterGroup& g, const oracle::PermModel& m, ElementId w) {
  return m.index(m.of_word(g.element(w).word()));
}

void compare_with_model(const CoxeterGroup& g, const oracle::PermModel& m) {
  ASSERT_TRUE(g.is_complete());
  ASSERT_EQ(g.size(), m.size());
  std::set<std::size_t> image;
  for (ElementId w = 0; w < g.size(); ++w) {
    const std::size_t mw = to_model(g, m, w);
    image.insert(mw);
    EXPECT_EQ(g.length(w), m.length(mw)) << g.name(w);
    for (Generator s = 0; s < g.rank(); ++s) {
      EXPECT_EQ(to_model(g, m, g.right_mult(w, s)), m.right(mw, s));
      EXPECT_EQ(to_model(g, m, g.left_mult(s, w)), m.left(s, mw));
      EXPECT_EQ(g.left_descents(w).contains(s), m.length(m.left(s, mw)) < m.length(mw));
      EXPECT_EQ(g.right_descents(w).contains(s), m.length(m.right(mw, s)) < m.length(mw));
    }
    EXPECT_EQ(to_model(g, m, g.inverse(w)), m.index([&] {
                const auto& p = m.element(mw);
                oracle::Perm q(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = static_cast<int>(k);
                return q;
              }()));
  }
  EXPECT_EQ(image.size(), m.size());
  for (ElementId x = 0; x < g.size(); ++x)
    for (ElementId z = 0; z < g.size(); ++z)
      EXPECT_EQ(g.bruhat_leq(x, z), m.bruhat_leq(to_model(g, m, x), to_model(g, m, z)))
          << g.name(x) << " <= " << g.name(z);
}

}  // namespace

TEST(CoxeterSystem, Validation) {
  EXPECT_NO_THROW(CoxeterSystem::create({{1}}, {1}));
  EXPECT_NO_THROW(CoxeterSystem::create({{1, 3}, {3, 1}}, {1, 1}));
  EXPECT_THROW(CoxeterSystem::create({{1, 3}, {3, 1}}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::create({{1, 3}, {4, 1}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::create({{2, 3}, {3, 1}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::create({{1, 1}, {1, 1}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::create({{1, 4}, {4, 1}}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::create({{1, 3}}, {1}), std::invalid_argument);
  EXPECT_NO_THROW(CoxeterSystem::create({{1, 4}, {4, 1}}, {3, 1}));
  EXPECT_NO_THROW(CoxeterSystem::create({{1, 0}, {0, 1}}, {2, 1}));
}

TEST(CoxeterGroup, Orders) {
  EXPECT_EQ(oracle::a1()->size(), 2u);
  EXPECT_EQ(oracle::a2()->size(), 6u);
  EXPECT_EQ(oracle::a3()->size(), 24u);
  EXPECT_EQ(oracle::b2()->size(), 8u);
  EXPECT_EQ(oracle::b3()->size(), 48u);
  EXPECT_EQ(oracle::i2(5)->size(), 10u);
  EXPECT_EQ(oracle::group({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}})->size(), 120u);
  EXPECT_EQ(oracle::group({{1, 3, 2, 2}, {3, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}})->size(), 120u);
}

TEST(CoxeterGroup, AgreesWithSymmetricGroupModel) {
  compare_with_model(*oracle::a2(), oracle::PermModel::symmetric(3));
  compare_with_model(*oracle::a3(), oracle::PermModel::symmetric(4));
}

TEST(CoxeterGroup, AgreesWithHyperoctahedralModel) {
  compare_with_model(*oracle::b2(), oracle::PermModel::hyperoctahedral(2));
  compare_with_model(*oracle::b3(), oracle::PermModel::hyperoctahedral(3));
}

TEST(CoxeterGroup, NormalizeExamples) {
  const auto g = oracle::a2();
  EXPECT_TRUE(g->normalize(std::vector<Generator>{0, 0}).is_identity());
  EXPECT_EQ(g->normalize(std::vector<Generator>{1, 0, 1}), g->normalize(std::vector<Generator>{0, 1, 0}));
  EXPECT_EQ(g->normalize(std::vector<Generator>{1, 0, 1}).word(), (std::vector<Generator>{0, 1, 0}));
  const auto b = oracle::b2();
  const Element longest = b->normalize(std::vector<Generator>{0, 1, 0, 1, 0});
  EXPECT_EQ(longest.length(), 3);
  EXPECT_EQ(b->normalize(std::vector<Generator>{1, 0, 1, 0}).length(), 4);
  EXPECT_EQ(b->normalize(std::vector<Generator>{1, 0, 1, 0}), b->normalize(std::vector<Generator>{0, 1, 0, 1}));
  EXPECT_THROW(g->normalize(std::vector<Generator>{2}), std::out_of_range);
}

TEST(CoxeterGroup, TitsRewritingAgreesWithTable) {
  for (const auto& g : {oracle::a3(), oracle::b3(), oracle::i2(5)}) {
    for (ElementId x = 0; x < g->size(); ++x)
      for (Generator s = 0; s < g->rank(); ++s) {
        auto word = g->element(x).word();
        word.push_back(s);
        word.insert(word.begin(), static_cast<Generator>((s + 1) % g->rank()));
        EXPECT_EQ(tits_normal_form(g->system(), word), g->normalize(word).word());
      }
  }
}

TEST(CoxeterGroup, MultLengthDescents) {
  const auto g = oracle::a2();
  for (ElementId x = 0; x < g->size(); ++x) EXPECT_EQ(g->mult(g->identity(), x), x);
  EXPECT_EQ(g->left_descents(id(*g, "12")), (GeneratorSet{0}));
  EXPECT_EQ(g->right_descents(id(*g, "121")), (GeneratorSet{0, 1}));
  EXPECT_EQ(g->length(id(*g, "121")), 3);
}

TEST(CoxeterGroup, BruhatExamples) {
  const auto g = oracle::a2();
  for (ElementId z = 0; z < g->size(); ++z) EXPECT_TRUE(g->bruhat_leq(g->identity(), z));
  EXPECT_TRUE(g->bruhat_leq(id(*g, "1"), id(*g, "21")));
  EXPECT_FALSE(g->bruhat_leq(id(*g, "12"), id(*g, "21")));
  std::size_t pairs = 0;
  for (ElementId x = 0; x < g->size(); ++x)
    for (ElementId z = 0; z < g->size(); ++z) pairs += g->bruhat_leq(x, z);
  EXPECT_EQ(pairs, 19u);
}

TEST(CoxeterGroup, MinCosetReps) {
  const auto g = oracle::a2();
  EXPECT_EQ(names(*g, g->min_coset_reps(GeneratorSet{0, 1})), (std::vector<std::string>{"e"}));
  EXPECT_EQ(names(*g, g->min_coset_reps(GeneratorSet{0})), (std::vector<std::string>{"e", "2", "12"}));
  EXPECT_EQ(g->min_coset_reps(GeneratorSet{}).size(), 6u);
}

TEST(CoxeterGroup, MinCosetRepsAgreeWithModel) {
  const auto g = oracle::a3();
  const auto m = oracle::PermModel::symmetric(4);
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const GeneratorSet J = GeneratorSet::from_bits(bits);
    std::set<std::size_t> expect, got;
    for (std::size_t x = 0; x < m.size(); ++x) {
      bool min = true;
      for (Generator s : J.to_vector()) min = min && m.length(m.right(x, s)) > m.length(x);
      if (min) expect.insert(x);
    }
    const auto reps = g->min_coset_reps(J);
    for (ElementId w : reps) got.insert(to_model(*g, m, w));
    EXPECT_EQ(got, expect);
    for (std::size_t i = 1; i < reps.size(); ++i)
      EXPECT_LT(g->element(reps[i - 1]), g->element(reps[i]));
  }
}

TEST(CoxeterGroup, DeodharExamples) {
  const auto g = oracle::a2();
  const GeneratorSet J{0};
  const auto c = g->deodhar_class(J, 0, g->identity());
  EXPECT_EQ(c.tag, DeodharTag::zero);
  EXPECT_EQ(c.conj, std::optional<Generator>(0));
  EXPECT_EQ(g->deodhar_class(J, 0, id(*g, "2")).tag, DeodharTag::plus);
  EXPECT_EQ(g->deodhar_class(J, 0, id(*g, "12")).tag, DeodharTag::minus);
  EXPECT_THROW(g->deodhar_class(J, 0, id(*g, "1")), std::invalid_argument);
}

TEST(CoxeterGroup, DeodharTotalityAndLengthAdditivity) {
  for (const auto& g : {oracle::a3(), oracle::b3(2, 1), oracle::i2(5)}) {
    for (std::uint64_t bits = 0; bits < (1u << g->rank()); ++bits) {
      const GeneratorSet J = GeneratorSet::from_bits(bits);
      for (ElementId w : g->min_coset_reps(J)) {
        for (ElementId u : g->parabolic_elements(J))
          EXPECT_EQ(g->length(g->mult(w, u)), g->length(w) + g->length(u));
        for (Generator s = 0; s < g->rank(); ++s) {
          const ElementId sw = g->left_mult(s, w);
          const bool minus = g->length(sw) < g->length(w);
          const bool plus = !minus && g->is_min_coset_rep(sw, J);
          int zero_witnesses = 0;
          for (Generator t : J.to_vector()) zero_witnesses += g->right_mult(w, t) == sw;
          EXPECT_EQ(int(minus) + int(plus) + int(zero_witnesses == 1), 1);
          const auto c = g->deodhar_class(J, s, w);
          EXPECT_EQ(c.tag == DeodharTag::zero, c.conj.has_value());
          if (c.tag == DeodharTag::zero) {
            EXPECT_EQ(g->mult(w, g->generator(*c.conj)), sw);
          }
        }
      }
    }
  }
}

TEST(CoxeterGroup, DoubleCosetsAndFactorize) {
  const auto g = oracle::a2();
  EXPECT_EQ(names(*g, g->double_coset_reps(GeneratorSet{0}, GeneratorSet{0})), (std::vector<std::string>{"e", "2"}));
  const auto [x, y] = g->factorize(GeneratorSet{}, GeneratorSet{0}, id(*g, "21"));
  EXPECT_EQ(g->name(x), "2");
  EXPECT_EQ(g->name(y), "1");
  for (ElementId w : g->parabolic_elements(GeneratorSet{0})) {
    const auto [a, b] = g->factorize(GeneratorSet{}, GeneratorSet{0}, w);
    EXPECT_EQ(a, g->identity());
    EXPECT_EQ(b, w);
  }
  EXPECT_THROW(g->factorize(GeneratorSet{0}, GeneratorSet{0}, id(*g, "1")), std::invalid_argument);
}

TEST(CoxeterGroup, FactorizationIsALengthAdditiveBijection) {
  for (const auto& g : {oracle::a2(), oracle::a3(), oracle::b2()}) {
    const int n = g->rank();
    for (std::uint64_t kb = 0; kb < (1u << n); ++kb)
      for (std::uint64_t jb = 0; jb < (1u << n); ++jb) {
        const GeneratorSet K = GeneratorSet::from_bits(kb), J = GeneratorSet::from_bits(jb);
        if (!J.is_subset_of(K)) continue;
        const auto DK = g->min_coset_reps(K);
        std::set<ElementId> DJK;
        for (ElementId y : g->min_coset_reps(J))
          if (g->in_parabolic(y, K)) DJK.insert(y);
        std::set<ElementId> products;
        for (ElementId x : DK)
          for (ElementId y : DJK) {
            const ElementId w = g->mult(x, y);
            EXPECT_EQ(g->length(w), g->length(x) + g->length(y));
            products.insert(w);
            EXPECT_EQ(g->factorize(J, K, w), std::make_pair(x, y));
          }
        const auto DJ = g->min_coset_reps(J);
        EXPECT_EQ(products, std::set<ElementId>(DJ.begin(), DJ.end()));
      }
  }
}

TEST(CoxeterGroup, DeodharClassesFactorThroughK) {
  // For w = xy (x in D_K, y in D_J ∩ W_K): s is minus/plus for w iff it is for x,
  // and if s is in D_K^0(x) with conjugate t, then the class of s at w is the
  // class of t at y in W_K.
  for (const auto& g : {oracle::a3(), oracle::b3(1, 2)}) {
    const int n = g->rank();
    for (std::uint64_t kb = 0; kb < (1u << n); ++kb)
      for (std::uint64_t jb = 0; jb < (1u << n); ++jb) {
        const GeneratorSet K = GeneratorSet::from_bits(kb), J = GeneratorSet::from_bits(jb);
        if (!J.is_subset_of(K)) continue;
        for (ElementId w : g->min_coset_reps(J)) {
          const auto [x, y] = g->factorize(J, K, w);
          for (Generator s = 0; s < n; ++s) {
            const auto cw = g->deodhar_class(J, s, w);
            const auto cx = g->deodhar_class(K, s, x);
            if (cx.tag == DeodharTag::zero) {
              const auto cy = g->deodhar_class(J, *cx.conj, y);
              EXPECT_EQ(cw.tag, cy.tag);
              EXPECT_EQ(cw.conj, cy.conj);
            } else {
              EXPECT_EQ(cw.tag, cx.tag);
            }
          }
        }
      }
  }
}

TEST(CoxeterGroup, InfiniteDihedralBall) {
  const auto g = std::make_shared<const CoxeterGroup>(CoxeterSystem::create({{1, 0}, {0, 1}}), 6);
  EXPECT_FALSE(g->is_complete());
  EXPECT_EQ(g->size(), 1u + 2 * 6);
  EXPECT_EQ(g->element(g->size() - 1).length(), 6);
  EXPECT_THROW(CoxeterGroup(CoxeterSystem::create({{1, 0}, {0, 1}})), std::runtime_error);
  const auto finite = std::make_shared<const CoxeterGroup>(CoxeterSystem::create({{1, 3}, {3, 1}}), 10);
  EXPECT_TRUE(finite->is_complete());
  EXPECT_EQ(finite->size(), 6u);
}

TEST(CoxeterGroup, ElementNames) {
  const auto g = oracle::a3();
  for (ElementId w = 0; w < g->size(); ++w) EXPECT_EQ(id(*g, g->name(w)), w);
  EXPECT_EQ(Element(std::vector<Generator>{0, 10}).name(11), "1.11");
  EXPECT_EQ(parse_word("1.11", 11), (std::vector<Generator>{0, 10}));
  EXPECT_THROW(parse_word("14", 3), std::invalid_argument);
  EXPECT_THROW(parse_word("1x", 3), std::invalid_argument);
}

TEST(ParabolicCosets, PositionsAndOrder) {
  const auto g = oracle::a3();
  const ParabolicCosets c(g, GeneratorSet{0}, GeneratorSet{0, 1});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.name(0), "e");
  EXPECT_EQ(c.name(1), "2");
  EXPECT_EQ(c.name(2), "12");
  EXPECT_EQ(c.position(id(*g, "3")), ParabolicCosets::kNone);
  EXPECT_TRUE(c.less(0, 2));
  EXPECT_EQ(c.left_position(0, 1), 1u);
}
