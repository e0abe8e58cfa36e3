#include <gtest/gtest.h>

#include <random>

#include "localelab/constructions.hpp"
#include "localelab/families.hpp"

using namespace localelab;

namespace {

bool same_values(std::vector<FamilyTuple> a, std::vector<FamilyTuple> b) {
  auto key = [](const FamilyTuple& t) { return t.values; };
  std::vector<std::array<Element, kMaxAggregates>> ka, kb;
  for (const auto& t : a) ka.push_back(key(t));
  for (const auto& t : b) kb.push_back(key(t));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace

TEST(Families, ClosureMatchesEnumeration) {
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    const FiniteFrame& f = *e.frame;
    const std::vector<Aggregate> aggs{meet_of(f), join_of(f, [&](Element a) { return f.pseudo(a); })};
    EXPECT_TRUE(same_values(tuples_by_enumeration(f.elements(), aggs), tuples_by_closure(f.elements(), aggs)))
        << e.id;
  }
}

TEST(Families, TupleFamiliesReproduceTheirValues) {
  const FiniteFrame f = boolean(3);
  const std::vector<Aggregate> aggs{meet_of(f), join_of(f)};
  for (const FamilyTuple& t : tuples_by_closure(f.elements(), aggs)) {
    ASSERT_FALSE(t.family.empty());
    EXPECT_EQ(t.values[0], f.meet_all(t.family));
    EXPECT_EQ(t.values[1], f.join_all(t.family));
  }
}

TEST(Families, CounterexampleIsSmallest) {
  const FiniteFrame c = chain(4);
  const FamilyQuantifier q;
  const std::vector<Aggregate> aggs{join_of(c)};
  // "the join of the family is at most 1" first fails on a single element.
  auto cex = q.counterexample(c.elements(), aggs, [](const auto& v) { return v[0] <= 1; });
  ASSERT_TRUE(cex.has_value());
  EXPECT_EQ(cex->size(), 1);
  EXPECT_FALSE(q.counterexample(c.elements(), aggs, [](const auto& v) { return v[0] <= 3; }).has_value());
}

TEST(Families, BothRoutesAgreeOnRandomPredicates) {
  const FiniteFrame f = downset_frame(Poset::antichain(3));
  const std::vector<Aggregate> aggs{meet_of(f), join_of(f, [&](Element a) { return f.double_neg(a); })};
  std::mt19937_64 rng(7);
  const FamilyQuantifier enumerating(64);
  const FamilyQuantifier closing(0);
  for (int trial = 0; trial < 200; ++trial) {
    const Element x = static_cast<Element>(rng() % static_cast<std::uint64_t>(f.size()));
    const Element y = static_cast<Element>(rng() % static_cast<std::uint64_t>(f.size()));
    auto pred = [&](const std::array<Element, kMaxAggregates>& v) { return v[0] != x || v[1] != y; };
    EXPECT_EQ(enumerating.counterexample(f.elements(), aggs, pred).has_value(),
              closing.counterexample(f.elements(), aggs, pred).has_value());
  }
}

TEST(Families, EmptyDomainHasNoFamilies) {
  const FiniteFrame f = chain(2);
  const std::vector<Aggregate> aggs{meet_of(f)};
  EXPECT_TRUE(tuples_by_closure(ElementSet{}, aggs).empty());
  EXPECT_TRUE(tuples_by_enumeration(ElementSet{}, aggs).empty());
}
