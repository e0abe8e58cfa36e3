#include <gtest/gtest.h>

#include "localelab/constructions.hpp"
#include "localelab/props.hpp"
#include "oracles.hpp"

using namespace localelab;

TEST(Props, L5Verdicts) {
  const FiniteFrame l = oracle::l5();
  PropertyEvaluator ev(l);

  const Verdict ed = ev.ed();
  EXPECT_FALSE(ed.holds);
  ASSERT_TRUE(ed.witness.has_value());
  EXPECT_EQ(ed.witness->law, Law::kSecondDeMorgan);
  EXPECT_EQ(ed.witness->family, (ElementSet{1, 2}));
  EXPECT_TRUE(reproduces(l, *ed.witness));

  const Verdict ws = ev.weakly_subfit();
  EXPECT_FALSE(ws.holds);
  ASSERT_TRUE(ws.witness.has_value());
  EXPECT_EQ(ws.witness->elements, (std::vector<Element>{1}));

  const Verdict sdm = ev.strong_de_morgan();
  EXPECT_FALSE(sdm.holds);
  ASSERT_TRUE(sdm.witness.has_value());
  EXPECT_EQ(sdm.witness->elements, (std::vector<Element>{1, 2}));

  EXPECT_TRUE(ev.semiregular().holds);
  EXPECT_FALSE(ev.irreducible().holds);
  EXPECT_FALSE(ev.boolean().holds);
  EXPECT_FALSE(ev.linear().holds);
  EXPECT_TRUE(ev.bot_scattered().holds);
}

TEST(Props, ChainsAreLinearAndDeMorgan) {
  for (int n = 1; n <= 6; ++n) {
    const FiniteFrame c = chain(n);
    PropertyEvaluator ev(c);
    EXPECT_TRUE(ev.linear().holds);
    EXPECT_TRUE(ev.ed().holds);
    EXPECT_TRUE(ev.idm().holds);
    EXPECT_TRUE(ev.hereditary(Property::kIed).holds);
    EXPECT_EQ(ev.boolean().holds, n <= 2);
    EXPECT_EQ(ev.weakly_subfit().holds, n <= 2);
  }
}

TEST(Props, BooleanFramesHaveEverything) {
  for (int k = 0; k <= 4; ++k) {
    const PropertyReport r = evaluate_properties(boolean(k), "boolean");
    for (Property p : kAllProperties) {
      if (p == Property::kLinear || p == Property::kIrreducible) continue;
      EXPECT_TRUE(r.holds(p)) << k << " " << property_name(p);
    }
    EXPECT_EQ(r.holds(Property::kLinear), k <= 1);
  }
}

TEST(Props, CharacterizationsAgreeAndWitnessesReproduce) {
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    const PropertyReport r = evaluate_properties(*e.frame, e.id);
    EXPECT_TRUE(r.consistent()) << e.id << ": " << (r.problems().empty() ? "" : r.problems().front());
    for (const auto& [p, v] : r.verdicts) {
      if (v.holds) continue;
      ASSERT_TRUE(v.witness.has_value()) << e.id << " " << property_name(p);
      EXPECT_TRUE(reproduces(*e.frame, *v.witness)) << e.id << " " << describe(*e.frame, *v.witness);
    }
  }
}

TEST(Props, DeMorganMatchesOracle) {
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    const oracle::Lattice l(*e.frame);
    EXPECT_EQ(is_ed(*e.frame).holds, oracle::de_morgan(l)) << e.id;
    EXPECT_EQ(is_boolean(*e.frame).holds, oracle::boolean(l)) << e.id;
  }
}

TEST(Props, FiniteCollapse) {
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    const bool ed = is_ed(*e.frame).holds;
    EXPECT_EQ(is_ied(*e.frame).holds, ed) << e.id;
    EXPECT_EQ(is_idm(*e.frame).holds, ed) << e.id;
    EXPECT_TRUE(is_bot_scattered(*e.frame).holds) << e.id;
  }
}

TEST(Props, HereditaryMatchesOracle) {
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    if (e.frame->size() > 12) continue;
    const bool expected = oracle::hereditarily_de_morgan(oracle::Lattice(*e.frame));
    for (Property base : {Property::kEd, Property::kIed, Property::kIdm}) {
      const Verdict v = is_hereditary(*e.frame, base);
      EXPECT_EQ(v.holds, expected) << e.id;
      EXPECT_TRUE(v.agree()) << e.id;
    }
  }
}

TEST(Props, FactsHold) {
  for (const CorpusEntry& e : enumerate_corpus(4))
    for (const FactCheck& f : check_facts(*e.frame)) EXPECT_TRUE(f.holds) << e.id << ": " << f.name;
}

TEST(Props, PropertyNamesRoundTrip) {
  for (Property p : kAllProperties) EXPECT_EQ(property_from_name(property_name(p)), p);
  EXPECT_FALSE(property_from_name("regular").has_value());
}

TEST(Props, LocallyFiniteNeedsACover) {
  const FiniteFrame l = oracle::l5();
  EXPECT_TRUE(is_locally_finite(l, ElementSet{1, 2}, ElementSet{4}));
  EXPECT_THROW(is_locally_finite(l, ElementSet{1, 2}, ElementSet{1, 2}), NotACover);
}

TEST(Props, SubsetBoundDoesNotChangeVerdicts) {
  PropsConfig enumerate_all{64, kDefaultSublocaleBudget};
  PropsConfig close_all{0, kDefaultSublocaleBudget};
  for (const CorpusEntry& e : enumerate_corpus(3)) {
    const PropertyReport a = evaluate_properties(*e.frame, e.id, enumerate_all);
    const PropertyReport b = evaluate_properties(*e.frame, e.id, close_all);
    for (Property p : kAllProperties) EXPECT_EQ(a.holds(p), b.holds(p)) << e.id << " " << property_name(p);
  }
}
