#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "localelab/frame.hpp"

namespace localelab {

/// A quantity folded over a family: op-fold of map(a) for a in the family.
/// `op` is an n×n table of an associative, commutative, idempotent operation
/// (a meet or join, possibly of a subframe expressed in parent indices).
struct Aggregate {
  std::vector<Element> map;
  std::vector<Element> op;
  int n = 0;

  Element apply(Element x, Element y) const {
    return op[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
  }
};

Aggregate meet_of(const FiniteFrame& frame, const std::function<Element(Element)>& map);
Aggregate join_of(const FiniteFrame& frame, const std::function<Element(Element)>& map);
Aggregate meet_of(const FiniteFrame& frame);
Aggregate join_of(const FiniteFrame& frame);

inline constexpr std::size_t kMaxAggregates = 4;

/// Values of the aggregates for one family, and a smallest family achieving them.
struct FamilyTuple {
  std::array<Element, kMaxAggregates> values{};
  ElementSet family;
};

/// Every distinct tuple achieved by a nonempty family A ⊆ domain, by literal
/// enumeration of all 2^|domain| - 1 subsets. Sorted by (|family|, family).
std::vector<FamilyTuple> tuples_by_enumeration(ElementSet domain, std::span<const Aggregate> aggregates);

/// Same result set as tuples_by_enumeration, computed by closing the set of
/// achievable tuples under "add one more member". Cost is bounded by the number
/// of distinct tuples (at most n^k), not by 2^|domain|.
std::vector<FamilyTuple> tuples_by_closure(ElementSet domain, std::span<const Aggregate> aggregates);

/// Quantifies laws over all nonempty families of a frame.
///
/// Every law about a family {a_i} that only mentions folds of the form ⋀f(a_i)
/// or ⋁g(a_i) depends on the family only through the tuple of folds, so "for
/// all families" is exactly "for all achievable tuples". Domains of size at
/// most `enumeration_bound` are enumerated subset by subset; larger domains use
/// the closure. Both routes are exact.
class FamilyQuantifier {
 public:
  using Predicate = std::function<bool(const std::array<Element, kMaxAggregates>&)>;

  explicit FamilyQuantifier(int enumeration_bound = 20) : enumeration_bound_(enumeration_bound) {}

  std::vector<FamilyTuple> tuples(ElementSet domain, std::span<const Aggregate> aggregates) const;

  /// A smallest family A ⊆ domain for which `holds` is false, if any.
  std::optional<ElementSet> counterexample(ElementSet domain, std::span<const Aggregate> aggregates,
                                           const Predicate& holds) const;

  bool enumerates(ElementSet domain) const { return domain.size() <= enumeration_bound_; }
  int enumeration_bound() const { return enumeration_bound_; }

 private:
  int enumeration_bound_;
};

}  // namespace localelab
