#include <gtest/gtest.h>

#include <random>

#include "localelab/maps.hpp"
#include "localelab/props.hpp"
#include "oracles.hpp"

using namespace localelab;

namespace {

// (−)**: L → B_L with B_L viewed as a frame of its own.
FrameHom double_negation_hom(const FrameRef& l, SubFrame& b) {
  b = sub_frame_structure(*l, booleanization(*l));
  FrameRef target = share(b.frame);
  std::vector<Element> table;
  for (Element a = 0; a < l->size(); ++a) table.push_back(b.lower(l->double_neg(a)));
  return validate_hom(l, target, table);
}

}  // namespace

TEST(Maps, IdentityIsOpenWithIdentityAdjoint) {
  const FrameRef l = share(oracle::l5());
  const FrameHom id = identity_hom(l);
  const LocalicMap r = right_adjoint(id);
  for (Element a = 0; a < l->size(); ++a) EXPECT_EQ(r(a), a);
  const Openness o = classify_openness(id);
  EXPECT_TRUE(o.open && o.nearly_open && o.weakly_open);
  EXPECT_TRUE(weakly_open_square_check(id));
}

TEST(Maps, DoubleNegationIsNearlyOpen) {
  const FrameRef l = share(oracle::l5());
  SubFrame b;
  const FrameHom dn = double_negation_hom(l, b);
  const Openness o = classify_openness(dn);
  EXPECT_TRUE(o.nearly_open);
  EXPECT_TRUE(o.weakly_open);
  EXPECT_TRUE(weakly_open_square_check(dn));
}

TEST(Maps, ConstantTopIsRejected) {
  const FrameRef c = share(chain(3));
  try {
    validate_hom(c, c, {2, 2, 2});
    FAIL();
  } catch (const HomError& e) {
    EXPECT_EQ(e.kind(), HomError::Kind::kNotJoinPreserving);
    EXPECT_TRUE(e.witness().empty());
  }
  try {
    validate_hom(c, c, {0, 0, 2, 2});
    FAIL();
  } catch (const HomError& e) {
    EXPECT_EQ(e.kind(), HomError::Kind::kWrongSize);
  }
}

TEST(Maps, MeetFailureHasWitness) {
  // {∅,{x},{y},{x,y}} → 2: send every nonzero to 1; joins survive, {x} ∧ {y} does not.
  const FrameRef b2 = share(boolean(2));
  const FrameRef two = share(chain(2));
  try {
    validate_hom(b2, two, {0, 1, 1, 1});
    FAIL();
  } catch (const HomError& e) {
    EXPECT_EQ(e.kind(), HomError::Kind::kNotMeetPreserving);
    EXPECT_EQ(e.witness(), (ElementSet{1, 2}));
  }
}

TEST(Maps, OpenSublocaleRestrictionIsOpen) {
  const FrameRef l = share(oracle::l5());
  const SubFrame down = down_frame(*l, 3);
  const FrameRef target = share(down.frame);
  std::vector<Element> table;
  for (Element a = 0; a < l->size(); ++a) table.push_back(down.lower(l->meet(a, 3)));
  const FrameHom f = validate_hom(l, target, table);
  EXPECT_TRUE(classify_openness(f).open);

  // Its localic map sends B of ↓{x,y} onto B_L.
  const LocalicMap r = right_adjoint(f);
  const Sublocale img = image(r, booleanization(*target));
  EXPECT_TRUE(is_sublocale(*l, img.members));
}

TEST(Maps, ImagePreimageBasics) {
  const FrameRef l = share(oracle::l5());
  const LocalicMap r = right_adjoint(identity_hom(l));
  for (const Sublocale& s : enumerate_sublocales(*l).members()) EXPECT_EQ(image(r, s), s);
  EXPECT_EQ(preimage(r, whole(*l)), whole(*l));
}

TEST(Maps, EnumeratedHomsMatchBruteForce) {
  const std::vector<FiniteFrame> frames{chain(2), chain(3), boolean(2), oracle::l5(), chain(4)};
  for (const FiniteFrame& a : frames)
    for (const FiniteFrame& b : frames) {
      const auto ours = enumerate_homs(share(a), share(b));
      const auto brute = oracle::all_homs(oracle::Lattice(a), oracle::Lattice(b));
      std::vector<std::vector<Element>> tables;
      for (const FrameHom& h : ours) tables.push_back(h.table);
      std::sort(tables.begin(), tables.end());
      std::vector<std::vector<Element>> expected = brute;
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(tables, expected) << a.size() << " -> " << b.size();
    }
}

TEST(Maps, OpennessChainAndArrowPreservation) {
  const std::vector<FiniteFrame> frames{chain(3), boolean(2), oracle::l5(), add_bottom(boolean(2))};
  for (const FiniteFrame& a : frames)
    for (const FiniteFrame& b : frames)
      for (const FrameHom& h : enumerate_homs(share(a), share(b))) {
        const Openness o = classify_openness(h);
        EXPECT_TRUE(!o.open || o.nearly_open);
        EXPECT_TRUE(!o.nearly_open || o.weakly_open);
        EXPECT_EQ(weakly_open_square_check(h), o.weakly_open);
        if (!o.weakly_open) {
          ASSERT_TRUE(o.weakly_open_witness.has_value());
          const Element w = *o.weakly_open_witness;
          EXPECT_FALSE(b.leq(h(a.double_neg(w)), b.double_neg(h(w))));
        }
      }
}

TEST(Maps, SomeHomIsNotWeaklyOpen) {
  // Search the corpus for a hom that is not skeletal.
  bool found = false;
  const auto corpus = enumerate_corpus(3);
  for (const CorpusEntry& s : corpus)
    for (const CorpusEntry& t : corpus) {
      if (found) break;
      for (const FrameHom& h : enumerate_homs(s.frame, t.frame))
        if (!classify_openness(h).weakly_open) {
          found = true;
          break;
        }
    }
  EXPECT_TRUE(found);
}

TEST(Maps, BooleanizationFunctor) {
  const FrameRef b2 = share(boolean(2));
  const BooleanRestriction id = booleanization_functor(identity_hom(b2));
  for (Element a = 0; a < id.hom.source->size(); ++a) EXPECT_EQ(id.hom(a), a);

  const FrameRef c3 = share(chain(3));
  const BooleanRestriction c = booleanization_functor(identity_hom(c3));
  EXPECT_EQ(c.hom.source->size(), 2);

  // boolean(2) → boolean(1) killing the atom {1}.
  const FrameRef b1 = share(boolean(1));
  const FrameHom q = validate_hom(b2, b1, {0, 1, 0, 1});
  const BooleanRestriction r = booleanization_functor(q);
  EXPECT_EQ(r.hom.table, q.table);

  EXPECT_THROW(booleanization_functor(identity_hom(share(oracle::l5()))), PreconditionError);
}

TEST(Maps, FunctorPreservesComposition) {
  const std::vector<FrameRef> frames{share(chain(2)), share(chain(3)), share(boolean(2)), share(add_bottom(boolean(2)))};
  for (const FrameRef& a : frames)
    for (const FrameRef& b : frames)
      for (const FrameRef& c : frames)
        for (const FrameHom& f : enumerate_homs(a, b))
          for (const FrameHom& g : enumerate_homs(b, c)) {
            const FrameHom bf = booleanization_functor(f).hom;
            const FrameHom bg = booleanization_functor(g).hom;
            EXPECT_EQ(booleanization_functor(compose(f, g)).hom.table, compose(bf, bg).table);
          }
}

TEST(Maps, CoreflectionFactorsUniquely) {
  const FrameRef b1 = share(boolean(1));
  const FrameRef c3 = share(chain(3));
  for (const FrameHom& h : enumerate_homs(b1, c3)) {
    const FrameHom bar = coreflection_check(h);
    EXPECT_EQ(bar.target->size(), 2);
  }
  const FrameRef b2 = share(boolean(2));
  const FrameHom bar = coreflection_check(identity_hom(b2));
  EXPECT_EQ(bar.table, identity_hom(b2).table);
  EXPECT_THROW(coreflection_check(identity_hom(c3)), PreconditionError);
}

TEST(Maps, RandomDownsetHomsAreValid) {
  std::mt19937_64 rng(5);
  const Poset p = Poset::chain(2);
  const Poset q = Poset::antichain(2);
  const FrameRef dp = share(downset_frame(p));
  const FrameRef dq = share(downset_frame(q));
  for (int i = 0; i < 50; ++i) {
    const FrameHom h = random_downset_hom(p, dp, q, dq, rng);
    EXPECT_NO_THROW(validate_hom(dp, dq, h.table));
  }
}
