#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "localelab/frame.hpp"
#include "localelab/props.hpp"

namespace localelab::symbolic {

using Rational = boost::multiprecision::cpp_rational;

/// The three finitely presented infinite frames.
enum class Kind {
  kCofinite,    // ∅ and the cofinite subsets of ℕ
  kOmegaChain,  // 0 < 1 < 2 < ... < ∞
  kInterval,    // [0, 1] ∩ ℚ under the usual order
};

std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);

/// An element in canonical form. Cofinite: `empty` or the finite complement
/// (sorted, duplicate free). ω-chain: Zero, Nat(n ≥ 1) or Infinity. Interval:
/// a rational in [0, 1].
class Element {
 public:
  enum class Tag { kEmptyOpen, kCofinOpen, kZero, kNat, kInfinity, kRat };

  static Element empty_open();
  static Element cofin_open(std::vector<long> complement);
  static Element zero();
  static Element nat(long n);
  static Element infinity();
  static Element rat(Rational q);

  Tag tag() const { return tag_; }
  Kind kind() const;
  const std::vector<long>& complement() const { return complement_; }
  long nat_value() const { return nat_; }
  const Rational& value() const { return q_; }

  std::string to_string() const;
  bool operator==(const Element&) const = default;

 private:
  Tag tag_ = Tag::kEmptyOpen;
  std::vector<long> complement_;
  long nat_ = 0;
  Rational q_;
};

class MixedFrames : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Element bottom(Kind kind);
Element top(Kind kind);
bool leq(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element implies(const Element& a, const Element& b);
Element pseudo(const Element& a);
Element double_neg(const Element& a);

class InconsistentClaim : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family from the fixed catalog, with claimed meet and join.
class PresentedFamily {
 public:
  enum class Schema {
    kFinite,             // an explicit list
    kConstant,           // a_i = c for all i ∈ ℕ
    kInitialSegments,    // cofinite: a_i = ℕ \ {0..i}
    kDecreasingTo,       // interval: a_i = limit + (start - limit) / 2^i
    kIncreasingTo,       // interval: a_i = limit - (limit - start) / 2^i, 0 < start
    kNatAscending,       // ω-chain: a_i = Nat(start + i)
  };

  static PresentedFamily finite(std::vector<Element> members);
  static PresentedFamily constant(Element value);
  static PresentedFamily initial_segments();
  static PresentedFamily decreasing_to(Rational limit, Rational start);
  static PresentedFamily increasing_to(Rational limit, Rational start);
  static PresentedFamily nat_ascending(long start);

  /// Same family with different claims; meant for exercising validation.
  PresentedFamily with_claims(Element meet, Element join) const;

  Kind kind() const { return kind_; }
  Schema schema() const { return schema_; }
  bool infinite() const { return schema_ != Schema::kFinite; }
  /// Number of members of a finite family.
  std::size_t size() const { return members_.size(); }
  Element member(std::size_t i) const;
  const Element& claimed_meet() const { return meet_; }
  const Element& claimed_join() const { return join_; }
  /// Whether no member is the bottom element (true by construction for the
  /// infinite schemas).
  bool avoids_bottom() const;
  std::string describe() const;

  /// Indices of members that a wrong claim would contradict, found in closed
  /// form from the claims themselves (e.g. member k against a claimed join
  /// Nat(k)). Empty for finite and constant families.
  std::vector<std::size_t> decisive_indices() const;
  /// The rational limit of the interval schemas.
  std::optional<Element> limit() const;

 private:
  Kind kind_ = Kind::kCofinite;
  Schema schema_ = Schema::kFinite;
  std::vector<Element> members_;
  Rational limit_;
  Rational start_;
  long nat_start_ = 1;
  Element meet_;
  Element join_;
};

inline constexpr std::size_t kDefaultPrefixDepth = 64;

/// Checks the claims against every prefix up to `depth`: prefix meets stay
/// above the claimed meet and decrease, prefix joins stay below the claimed
/// join and increase, and each probe strictly between a claim and the
/// direction it is approached from is passed by some prefix. The decisive
/// members and the schema limit are probed as well. Throws
/// InconsistentClaim.
void validate_claims(const PresentedFamily& family, std::size_t depth = kDefaultPrefixDepth);
Element family_meet(const PresentedFamily& family, std::size_t depth = kDefaultPrefixDepth);
Element family_join(const PresentedFamily& family, std::size_t depth = kDefaultPrefixDepth);

enum class Pointwise { kPseudo, kDoubleNeg };
/// The family {a_i*} or {a_i**}, again from the catalog. For infinite schemas
/// the members avoid bottom, so in the irreducible frames here every a_i* is 0
/// and every a_i** is 1.
PresentedFamily map_family(const PresentedFamily& family, Pointwise op);

/// Machine-checked support for one verdict.
struct Certificate {
  std::string claim;
  std::string characterization;
  std::string family;  // schema of the witness family, or empty
  std::size_t prefix_depth = 0;
};

struct SymbolicVerdict {
  Property property;
  bool holds = false;
  Certificate certificate;
};

struct SymbolicReport {
  Kind kind;
  std::vector<SymbolicVerdict> verdicts;
  std::vector<FactCheck> facts;

  const SymbolicVerdict* find(Property p) const;
  bool holds(Property p) const;
};

/// Regular elements, by case analysis of pseudo on element forms.
std::vector<Element> regular_elements(Kind kind);

/// Verdicts for ed, ied, idm, bot_scattered, boolean, weakly_subfit,
/// semiregular, irreducible and linear, each with its certificate, plus the
/// fact biconditionals evaluated on the verdicts.
SymbolicReport classify_symbolic(Kind kind, std::size_t depth = kDefaultPrefixDepth);

/// One non-implication of the chain Boolean ⇒ IDM ⇒ IED ⇒ ED and
/// IED ⇏ ⊥-scattered. `frame` is empty when no desk-scale example exists.
struct Separation {
  Property holds;
  Property fails;
  std::optional<Kind> frame;
  std::optional<Certificate> certificate;
  std::string note;
};

std::vector<Separation> strict_hierarchy_witnesses(std::size_t depth = kDefaultPrefixDepth);
std::optional<Separation> separation(Property holds, Property fails, std::size_t depth = kDefaultPrefixDepth);

/// Cofinite topology on {0..m}: a finite frame (all subsets).
FiniteFrame cofinite_truncation(int m);

/// A finite set of rationals containing 0 and 1 is a dense sublocale of the
/// interval whose frame is a finite chain, hence IDM. Returns a strictly
/// larger such set (the midpoint of the widest gap added), after checking
/// both sets are meet closed, closed under a → s and dense.
std::vector<Rational> extend_dense_chain_sublocale(std::vector<Rational> members);

}  // namespace localelab::symbolic
