#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "localelab/frame.hpp"
#include "localelab/props.hpp"
#include "localelab/sublocale.hpp"

namespace localelab {

/// A finite partial order on {0, ..., m-1}.
struct Poset {
  int m = 0;
  OrderMatrix leq;

  /// Throws std::invalid_argument unless `leq` is a partial order.
  static Poset validated(OrderMatrix leq);
  static Poset chain(int m);
  static Poset antichain(int m);

  bool operator==(const Poset&) const = default;
};

/// A topology on {0, ..., points-1}; each open set is a bitmask.
struct FiniteSpace {
  int points = 0;
  std::vector<std::uint64_t> opens;

  /// Throws std::invalid_argument unless ∅ and the whole set are open and
  /// opens are closed under binary unions and intersections.
  static FiniteSpace validated(int points, std::vector<std::uint64_t> opens);
  /// Distinct points are separated by some open set.
  bool is_t0() const;
};

FiniteFrame chain(int n);
/// Power set of a k-element set; boolean(0) is the one-element frame.
FiniteFrame boolean(int k);

/// Down-closed subsets of `p` as bitmasks, sorted by (size, mask).
std::vector<std::uint64_t> downsets_of(const Poset& p);
/// Downsets of `p` under inclusion, indexed as in downsets_of.
FiniteFrame downset_frame(const Poset& p);
/// Ω(X), indexed as the opens sorted by (size, mask).
FiniteFrame open_set_frame(const FiniteSpace& x);

/// Join-irreducible elements of a frame with the induced order.
Poset join_irreducibles(const FiniteFrame& frame);

/// A new strict bottom below `frame`; element i of the input becomes i + 1.
/// Checks that the new bottom is completely prime, that the result is IDM,
/// and that hereditary IDM / IED are unchanged.
FiniteFrame add_bottom(const FiniteFrame& frame);

/// Posets of the configured maximum size give frames of up to 64 elements.
inline constexpr int kMaxCorpusPosetSize = 6;

/// Pairwise non-isomorphic posets with exactly m elements, in canonical order.
std::vector<Poset> enumerate_posets(int m);

struct CorpusEntry {
  std::string id;
  Poset source;
  FrameRef frame;
  std::string canonical_hash;
};

/// Downset frames of every poset with at most `max_poset_size` elements, up to
/// isomorphism. Size 0 contributes the one-element frame. Throws
/// BudgetExceeded above kMaxCorpusPosetSize.
std::vector<CorpusEntry> enumerate_corpus(int max_poset_size);

/// Identifier used for the k-th poset of size m.
std::string corpus_id(int m, std::size_t k);

using SubsetFunction = std::function<Element(ElementSet)>;

/// {a : f(A) → a = g(A) → a for all A ⊆ L}, quantifying over every subset
/// (including ∅). Checked to be a sublocale. Throws BudgetExceeded when the
/// frame has more than `max_enumerated` elements.
Sublocale s_fg(const FiniteFrame& frame, const SubsetFunction& f, const SubsetFunction& g, int max_enumerated = 16);

/// {a : x → a = y → a for every pair (x, y)}.
Sublocale s_fg_from_pairs(const FiniteFrame& frame, const std::vector<std::pair<Element, Element>>& pairs);

/// Every pair ((⋁A)**, ⋁{a** : a ∈ A}) over nonempty families A.
std::vector<std::pair<Element, Element>> ied_defect_pairs(const FiniteFrame& frame);

/// The largest dense sublocale of `frame` whose own frame satisfies `base`,
/// by enumeration. nullopt if the dense ones satisfying `base` have no
/// largest member. Throws BudgetExceeded from enumerate_sublocales.
std::optional<Sublocale> largest_dense_by_enumeration(const FiniteFrame& frame, Property base,
                                                      std::size_t budget = kDefaultSublocaleBudget);

struct LargestDense {
  Sublocale sublocale;
  /// The enumeration cross-check ran (false when the budget was exceeded).
  bool cross_checked = false;
};

/// S = {a : (⋁A)** → a = (⋁A**) → a for all A}. Checks that S is dense, IED,
/// contains B_L, and equals the enumerated maximum of dense IED and of dense
/// ED sublocales when enumeration fits in `budget`.
LargestDense largest_dense_ied(const FiniteFrame& frame, std::size_t budget = kDefaultSublocaleBudget);

/// On finite frames IDM and IED coincide and every frame is ⊥-scattered, so
/// this is largest_dense_ied, cross-checked against dense IDM sublocales.
/// nullopt would mean no largest one exists; that never happens on finite input.
std::optional<LargestDense> largest_dense_idm(const FiniteFrame& frame, std::size_t budget = kDefaultSublocaleBudget);

}  // namespace localelab
