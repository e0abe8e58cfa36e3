#include <gtest/gtest.h>

#include <random>

#include "localelab/canonical.hpp"
#include "localelab/constructions.hpp"
#include "localelab/props.hpp"
#include "oracles.hpp"

using namespace localelab;

TEST(Constructions, SmallGenerators) {
  EXPECT_EQ(boolean(0).size(), 1);
  EXPECT_EQ(boolean(1).size(), 2);
  EXPECT_EQ(boolean(3).size(), 8);
  EXPECT_TRUE(isomorphic(downset_frame(Poset::antichain(2)), boolean(2)));
  EXPECT_EQ(chain(4).size(), 4);
}

TEST(Constructions, OpenSetFrameOfThreePointSpaceIsL5) {
  const FiniteFrame l = oracle::l5();
  EXPECT_EQ(l.size(), 5);
  EXPECT_EQ(l.label(1), "{0}");
  EXPECT_TRUE(l.leq(1, 3));
  EXPECT_FALSE(l.leq(1, 2));
}

TEST(Constructions, SpacesAreValidated) {
  EXPECT_THROW(FiniteSpace::validated(2, {0b00, 0b01, 0b10}), std::invalid_argument);
  EXPECT_THROW(FiniteSpace::validated(2, {0b01, 0b11}), std::invalid_argument);
  EXPECT_TRUE(FiniteSpace::validated(2, {0b00, 0b01, 0b11}).is_t0());
  EXPECT_FALSE(FiniteSpace::validated(2, {0b00, 0b11}).is_t0());
}

TEST(Constructions, PosetCounts) {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63};
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(enumerate_posets(m).size(), expected[m]) << m;
  EXPECT_THROW(enumerate_posets(kMaxCorpusPosetSize + 1), BudgetExceeded);
}

TEST(Constructions, CorpusContents) {
  const auto up_to_one = enumerate_corpus(1);
  ASSERT_EQ(up_to_one.size(), 2U);
  EXPECT_EQ(up_to_one[0].frame->size(), 1);
  EXPECT_EQ(up_to_one[1].frame->size(), 2);
  EXPECT_EQ(up_to_one[0].id, "p0-000");

  auto contains = [](const std::vector<CorpusEntry>& corpus, const FiniteFrame& f) {
    return std::any_of(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return isomorphic(*e.frame, f); });
  };
  const auto up_to_two = enumerate_corpus(2);
  EXPECT_TRUE(contains(up_to_two, chain(3)));
  EXPECT_TRUE(contains(up_to_two, boolean(2)));
  EXPECT_TRUE(contains(enumerate_corpus(3), oracle::l5()));
  EXPECT_EQ(enumerate_corpus(5).size(), 88U);
}

TEST(Constructions, JoinIrreduciblesRecoverThePoset) {
  for (int m = 0; m <= 4; ++m)
    for (const Poset& p : enumerate_posets(m)) {
      const Poset j = join_irreducibles(downset_frame(p));
      EXPECT_EQ(j.m, p.m);
      EXPECT_TRUE(isomorphic(downset_frame(j), downset_frame(p)));
    }
}

TEST(Constructions, AddBottom) {
  const FiniteFrame two = add_bottom(chain(2));
  EXPECT_TRUE(isomorphic(two, chain(3)));
  EXPECT_TRUE(is_idm(two).holds);

  const FiniteFrame l = add_bottom(oracle::l5());
  EXPECT_EQ(l.size(), 6);
  EXPECT_TRUE(is_idm(l).holds);
  EXPECT_FALSE(is_boolean(l).holds);

  const FiniteFrame b = add_bottom(boolean(2));
  EXPECT_TRUE(is_idm(b).holds);
  EXPECT_TRUE(is_ed(b).holds);
}

TEST(Constructions, AddBottomKeepsHeredity) {
  for (const CorpusEntry& e : enumerate_corpus(3)) {
    const FiniteFrame lifted = add_bottom(*e.frame);
    EXPECT_EQ(is_hereditary(lifted, Property::kIdm).holds, is_hereditary(*e.frame, Property::kIdm).holds) << e.id;
  }
}

TEST(Constructions, SfgIsAlwaysASublocale) {
  const FiniteFrame l = oracle::l5();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> ft(32), gt(32);
    for (auto& x : ft) x = static_cast<Element>(rng() % 5);
    for (auto& x : gt) x = static_cast<Element>(rng() % 5);
    const Sublocale s = s_fg(
        l, [&](ElementSet a) { return ft[a.bits()]; }, [&](ElementSet a) { return gt[a.bits()]; });
    EXPECT_TRUE(oracle::is_sublocale(oracle::Lattice(l), s.members));
  }
}

TEST(Constructions, SfgOfEqualFunctionsIsWhole) {
  const FiniteFrame l = oracle::l5();
  auto f = [&](ElementSet a) { return l.join_all(a); };
  EXPECT_EQ(s_fg(l, f, f).members, l.elements());
  EXPECT_THROW(s_fg(boolean(5), f, f), BudgetExceeded);
}

TEST(Constructions, SfgFromPairs) {
  const FiniteFrame c = chain(3);
  // 1 → a = 2 → a fails only at a = 1.
  const Sublocale s = s_fg_from_pairs(c, {{1, 2}});
  EXPECT_TRUE(is_sublocale(c, s.members));
  EXPECT_EQ(s.members, (ElementSet{0, 2}));
}

TEST(Constructions, LargestDenseIedMatchesOracle) {
  const FiniteFrame l = oracle::l5();
  EXPECT_EQ(largest_dense_ied(l).sublocale.members, (ElementSet{0, 1, 2, 4}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(largest_dense_ied(chain(n)).sublocale.members, chain(n).elements());
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    if (e.frame->size() > 12) continue;
    const LargestDense d = largest_dense_ied(*e.frame);
    EXPECT_TRUE(d.cross_checked);
    EXPECT_EQ(std::optional<ElementSet>(d.sublocale.members), oracle::largest_dense_de_morgan(oracle::Lattice(*e.frame)))
        << e.id;
    auto idm = largest_dense_idm(*e.frame);
    ASSERT_TRUE(idm.has_value());
    EXPECT_EQ(idm->sublocale, d.sublocale);
  }
}

TEST(Constructions, IedDefectPairsVanishOnIedFrames) {
  for (const CorpusEntry& e : enumerate_corpus(3)) {
    bool all_equal = true;
    for (auto [x, y] : ied_defect_pairs(*e.frame)) all_equal = all_equal && x == y;
    EXPECT_EQ(all_equal, is_ied(*e.frame).holds) << e.id;
  }
}
