#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "localelab/frame.hpp"

namespace localelab {

/// A sublocale of some frame, represented by its member set. The frame is
/// passed alongside to every operation.
struct Sublocale {
  ElementSet members;

  bool contains(Element a) const { return members.contains(a); }
  bool operator==(const Sublocale&) const = default;
  auto operator<=>(const Sublocale&) const = default;
};

/// Why a subset fails to be a sublocale.
struct SublocaleCheck {
  enum class Failure { kNone, kMissingTop, kNotMeetClosed, kNotHeytingClosed };

  Failure failure = Failure::kNone;
  /// kNotMeetClosed: (s, t) with s ∧ t outside. kNotHeytingClosed: (a, s)
  /// with a → s outside.
  std::vector<Element> witness;

  explicit operator bool() const { return failure == Failure::kNone; }
};

/// Closed under all meets (top included) and a → s ∈ S for all a ∈ L, s ∈ S.
/// The empty subset is never a sublocale.
SublocaleCheck check_sublocale(const FiniteFrame& frame, ElementSet subset);
inline bool is_sublocale(const FiniteFrame& frame, ElementSet subset) {
  return static_cast<bool>(check_sublocale(frame, subset));
}

/// Smallest sublocale containing `generators`: the meet-closure of {a → x}.
Sublocale generated_sublocale(const FiniteFrame& frame, ElementSet generators);

/// a ↦ ⋀{s ∈ S : s ≥ a}.
std::vector<Element> nucleus_of(const FiniteFrame& frame, const Sublocale& s);

/// o(a) = {a → b : b ∈ L}; asserted equal to {b : a → b = b}.
Sublocale open_sublocale(const FiniteFrame& frame, Element a);
/// c(a) = ↑a.
Sublocale closed_sublocale(const FiniteFrame& frame, Element a);

Sublocale whole(const FiniteFrame& frame);
Sublocale closure(const FiniteFrame& frame, const Sublocale& s);
bool is_dense(const FiniteFrame& frame, const Sublocale& s);

/// Largest open sublocale inside `s`: o(⋁{a : o(a) ⊆ s}).
Sublocale interior(const FiniteFrame& frame, const Sublocale& s);

/// B_L, the regular elements. Both presentations {a*} and {a : a** = a} are
/// computed and required to agree; the result is checked to be a dense
/// sublocale in which every member is complemented.
Sublocale booleanization(const FiniteFrame& frame);

/// A subset viewed as a frame of its own, with index maps to and from the
/// ambient frame.
struct SubFrame {
  FiniteFrame frame;
  std::vector<Element> to_parent;
  std::vector<Element> from_parent;  // -1 for non-members

  Element lift(Element local) const { return to_parent[static_cast<std::size_t>(local)]; }
  Element lower(Element parent) const { return from_parent[static_cast<std::size_t>(parent)]; }
  ElementSet lift(ElementSet local) const;
};

/// The induced order on `subset`, validated as a frame. Throws FrameError if
/// the induced order is not a frame.
SubFrame induced_frame(const FiniteFrame& frame, ElementSet subset);

/// The frame structure of a sublocale. Meets agree with the ambient frame and
/// joins are ν_S of ambient joins; both are checked.
SubFrame sub_frame_structure(const FiniteFrame& frame, const Sublocale& s);

/// ↓a, closed under joins and nonempty meets of the ambient frame.
SubFrame down_frame(const FiniteFrame& frame, Element a);

/// x* computed in c(b) equals x → b for every x ≥ b.
bool closed_pseudocomplement_formula_holds(const FiniteFrame& frame, Element b);
/// x* computed in ↓a equals x* ∧ a for every x ≤ a, and o(a) ≅ ↓a via x ↦ a → x.
bool open_pseudocomplement_formula_holds(const FiniteFrame& frame, Element a);

/// All sublocales of a frame ordered by inclusion, in ascending order of
/// their member bitmasks.
class SublocaleLattice {
 public:
  SublocaleLattice(const FiniteFrame& frame, std::vector<Sublocale> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<Sublocale>& members() const& { return members_; }
  // By value on temporaries, so `for (s : enumerate_sublocales(f).members())` is safe.
  std::vector<Sublocale> members() && { return std::move(members_); }
  const Sublocale& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const Sublocale& s) const;

  bool leq(std::size_t i, std::size_t j) const { return members_[i].members.subset_of(members_[j].members); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return size() - 1; }

  /// Intersection of arbitrary families is a sublocale and joins distribute
  /// over binary meets: S ∨ (T ∩ U) = (S ∨ T) ∩ (S ∨ U).
  bool is_coframe() const;

  /// Covering pairs of the inclusion order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<Sublocale> members_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  bool meets_are_intersections_ = true;
};

inline constexpr std::size_t kDefaultSublocaleBudget = 4096;

/// Enumerates every sublocale by closing {top} under "add one element and
/// regenerate". Throws BudgetExceeded beyond `budget` sublocales.
SublocaleLattice enumerate_sublocales(const FiniteFrame& frame, std::size_t budget = kDefaultSublocaleBudget);

}  // namespace localelab
