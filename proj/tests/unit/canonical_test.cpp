#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "localelab/canonical.hpp"
#include "localelab/constructions.hpp"
#include "oracles.hpp"

using namespace localelab;

namespace {

FiniteFrame permuted(const FiniteFrame& f, const std::vector<int>& perm) {
  const int n = f.size();
  OrderMatrix leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[perm[a]][perm[b]] = f.leq(a, b);
  return validate_frame(leq);
}

}  // namespace

TEST(Canonical, HashIsSixteenHexDigits) {
  const std::string h = canonical_hash(oracle::l5());
  EXPECT_EQ(h.size(), 16U);
  EXPECT_TRUE(std::all_of(h.begin(), h.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); }));
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const CorpusEntry& e : enumerate_corpus(4)) {
    std::vector<int> perm(static_cast<std::size_t>(e.frame->size()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const FiniteFrame g = permuted(*e.frame, perm);
      EXPECT_EQ(canonical_hash(g), e.canonical_hash) << e.id;
      EXPECT_TRUE(isomorphic(g, *e.frame));
    }
  }
}

TEST(Canonical, CorpusFramesAreDistinct) {
  std::set<std::string> hashes;
  const auto corpus = enumerate_corpus(5);
  for (const CorpusEntry& e : corpus) hashes.insert(e.canonical_hash);
  EXPECT_EQ(hashes.size(), corpus.size());
  for (std::size_t i = 0; i + 1 < corpus.size() && i < 20; ++i)
    EXPECT_FALSE(isomorphic(*corpus[i].frame, *corpus[i + 1].frame));
}

TEST(Canonical, ChainAndBooleanDiffer) {
  EXPECT_FALSE(isomorphic(chain(4), boolean(2)));
  EXPECT_TRUE(isomorphic(boolean(2), downset_frame(Poset::antichain(2))));
  EXPECT_TRUE(isomorphic(chain(3), downset_frame(Poset::chain(2))));
}

TEST(Canonical, FormIsAnOrderOnTheSameSize) {
  const CanonicalForm c = canonical_form(oracle::l5());
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.rows.size(), 5U);
  EXPECT_TRUE(c.same_shape(canonical_form(oracle::l5())));
}
