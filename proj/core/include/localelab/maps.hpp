#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "localelab/constructions.hpp"
#include "localelab/frame.hpp"
#include "localelab/sublocale.hpp"

namespace localelab {

/// A frame homomorphism source → target given by its table.
struct FrameHom {
  FrameRef source;
  FrameRef target;
  std::vector<Element> table;

  Element operator()(Element a) const { return table[static_cast<std::size_t>(a)]; }
};

class HomError : public std::invalid_argument {
 public:
  enum class Kind { kWrongSize, kOutOfRange, kNotJoinPreserving, kNotMeetPreserving };

  HomError(Kind kind, ElementSet witness, const std::string& message)
      : std::invalid_argument(message), kind_(kind), witness_(witness) {}

  Kind kind() const { return kind_; }
  /// A subset of the source whose join (or meet) is not preserved; the empty
  /// set stands for bottom (or top).
  ElementSet witness() const { return witness_; }

 private:
  Kind kind_;
  ElementSet witness_;
};

/// Checks that `table` preserves 0, binary joins, 1 and binary meets, which on
/// finite frames is all joins and all finite meets.
FrameHom validate_hom(FrameRef source, FrameRef target, std::vector<Element> table);
FrameHom identity_hom(FrameRef frame);
/// g ∘ f.
FrameHom compose(const FrameHom& f, const FrameHom& g);

/// The right adjoint f_*: target → source, f_*(m) = ⋁{a : f(a) ≤ m}.
struct LocalicMap {
  FrameHom hom;
  std::vector<Element> table;

  Element operator()(Element m) const { return table[static_cast<std::size_t>(m)]; }
};

/// Checks f(a) ≤ m ⇔ a ≤ f_*(m) for all a, m.
LocalicMap right_adjoint(const FrameHom& f);
/// f_!(b) = ⋀{a : b ≤ f(a)}; exists on finite frames since f preserves meets.
std::vector<Element> left_adjoint(const FrameHom& f);

struct Openness {
  bool open = false;
  bool nearly_open = false;
  bool weakly_open = false;
  /// (a, b) with f_!(b ∧ f(a)) ≠ f_!(b) ∧ a.
  std::optional<std::pair<Element, Element>> frobenius_witness;
  /// a with f(a*) ≠ f(a)*.
  std::optional<Element> nearly_open_witness;
  /// a with f(a**) ≰ f(a)**.
  std::optional<Element> weakly_open_witness;
};

/// Open means the left adjoint satisfies Frobenius reciprocity; checked to
/// coincide with f preserving Heyting arrows, and open ⇒ nearly open ⇒ weakly
/// open is asserted.
Openness classify_openness(const FrameHom& f);

/// Set-theoretic image f_*[S] of a sublocale of the target; checked to be a
/// sublocale of the source.
Sublocale image(const LocalicMap& f, const Sublocale& s);
/// Largest sublocale of the target whose image lies inside `t`, over the
/// enumerated sublocale lattice. Checks image ⊣ preimage on all pairs.
Sublocale preimage(const LocalicMap& f, const Sublocale& t, std::size_t budget = kDefaultSublocaleBudget);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Restriction of f: L → M to B_L → B_M for IED frames. Also returned: the
/// Booleanizations as frames. Throws PreconditionError unless both frames are
/// IED; checks the restriction lands in B_M, is a frame homomorphism between
/// the Booleanizations, and that the inclusion square commutes.
struct BooleanRestriction {
  FrameHom hom;                  // B_L → B_M, both as sub frames
  SubFrame source_boolean;
  SubFrame target_boolean;
};
BooleanRestriction booleanization_functor(const FrameHom& f);

/// For Boolean B0 and IED L, the unique h̄: B0 → B_L with i_L ∘ h̄ = h.
/// Uniqueness is checked by trying every map B0 → B_L when that is small.
FrameHom coreflection_check(const FrameHom& h);

/// Whether some frame homomorphism g: B_L → B_M has g(a**) = f(a)** for all a.
/// The only candidate is g(b) = f(b)**.
bool weakly_open_square_check(const FrameHom& f);

/// Every frame homomorphism source → target, by backtracking over monotone
/// partial tables. Throws BudgetExceeded past `limit` results.
std::vector<FrameHom> enumerate_homs(FrameRef source, FrameRef target, std::size_t limit = 100000);

/// Frame homomorphisms D(p) → D(q) correspond to monotone maps φ: q → p via
/// U ↦ φ⁻¹(U). Draws a uniformly random monotone map by rejection.
/// `source` and `target` must be downset_frame(p) and downset_frame(q).
FrameHom random_downset_hom(const Poset& p, FrameRef source, const Poset& q, FrameRef target, std::mt19937_64& rng);

}  // namespace localelab
