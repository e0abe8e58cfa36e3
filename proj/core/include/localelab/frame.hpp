#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "localelab/element_set.hpp"
#include "localelab/errors.hpp"

namespace localelab {

/// Square boolean matrix; `leq[a][b]` means a <= b.
using OrderMatrix = std::vector<std::vector<bool>>;

/// A finite complete Heyting algebra. Built only through validate_frame, after
/// which it is immutable: binary meet/join and the Heyting arrow are tabulated.
class FiniteFrame {
 public:
  int size() const { return n_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  ElementSet elements() const { return ElementSet::all(n_); }

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  ElementSet up_set(Element a) const { return up_[a]; }
  ElementSet down_set(Element a) const { return down_[a]; }

  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element implies(Element a, Element b) const { return imp_[index(a, b)]; }
  Element pseudo(Element a) const { return imp_[index(a, bottom_)]; }
  Element double_neg(Element a) const { return pseudo(pseudo(a)); }

  /// Meet of an arbitrary subset; the empty meet is top.
  Element meet_all(ElementSet s) const;
  /// Join of an arbitrary subset; the empty join is bottom.
  Element join_all(ElementSet s) const;

  /// Elements covered by nothing in between: a < b with no c, a < c < b.
  std::vector<std::pair<Element, Element>> covers() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element a) const;
  OrderMatrix order() const;

  bool operator==(const FiniteFrame& other) const {
    return n_ == other.n_ && up_ == other.up_ && labels_ == other.labels_;
  }

 private:
  friend FiniteFrame validate_frame(const OrderMatrix& leq, std::vector<std::string> labels);

  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> imp_;
  std::vector<std::string> labels_;
};

using FrameRef = std::shared_ptr<const FiniteFrame>;

inline FrameRef share(FiniteFrame frame) { return std::make_shared<const FiniteFrame>(std::move(frame)); }

/// Checks the order relation is a partial order, a lattice and distributive,
/// then tabulates the operations. Throws FrameError naming the first violated
/// axiom with a witness: (i) for reflexivity, (i, j) for antisymmetry,
/// (i, j, k) for transitivity, (a, b) for a missing meet/join and (a, b, c) for
/// a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c).
FiniteFrame validate_frame(const OrderMatrix& leq, std::vector<std::string> labels = {});

/// Builds the order of a family of sets under inclusion and validates it.
FiniteFrame frame_from_sets(const std::vector<std::uint64_t>& sets, std::vector<std::string> labels = {});

/// Outcome of heyting_laws_check: `passed`, or the failed law and its witness.
struct HeytingLawReport {
  bool passed = true;
  std::string failed_law;
  std::vector<Element> witness;
  ElementSet family;
};

/// Exhaustively verifies the standard Heyting identities on `frame`:
/// a → ⋀B = ⋀(a → b), (⋁A) → b = ⋀(a → b), a → b = 1 iff a ≤ b,
/// a → b = a → (a ∧ b), a → b = (a ∨ b) → b, the adjunction, the first De Morgan
/// law (⋁A)* = ⋀A*, finite-meet preservation of (−)** and (a → b)** = a** → b**,
/// plus the usual pseudocomplement laws and that (−)** is a nucleus.
HeytingLawReport heyting_laws_check(const FiniteFrame& frame);

}  // namespace localelab
