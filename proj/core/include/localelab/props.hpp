#pragma once

#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "localelab/families.hpp"
#include "localelab/frame.hpp"
#include "localelab/sublocale.hpp"

namespace localelab {

struct PropsConfig {
  /// Family domains up to this size are enumerated subset by subset; larger
  /// ones use the tuple closure. Both are exact.
  int subset_quantification_bound = 12;
  std::size_t sublocale_budget = kDefaultSublocaleBudget;
};

enum class Property {
  kEd,
  kIed,
  kIdm,
  kBotScattered,
  kBoolean,
  kWeaklySubfit,
  kSemiregular,
  kIrreducible,
  kLinear,
  kStrongDeMorgan,
  kHereditaryEd,
  kHereditaryIed,
  kHereditaryIdm,
  kScattered,
};

inline constexpr Property kAllProperties[] = {
    Property::kEd,          Property::kIed,           Property::kIdm,          Property::kBotScattered,
    Property::kBoolean,     Property::kWeaklySubfit,  Property::kSemiregular,  Property::kIrreducible,
    Property::kLinear,      Property::kStrongDeMorgan, Property::kHereditaryEd, Property::kHereditaryIed,
    Property::kHereditaryIdm, Property::kScattered,
};

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

/// The law a witness violates. Each law has a fixed witness shape.
enum class Law {
  kSecondDeMorgan,          // family A: (⋀A)* ≰ ⋁{a*}
  kDoubleNegationJoins,     // family A: (⋁A)** ≰ ⋁{a**}
  kDoubleNegationMeets,     // family A: ⋀{a**} ≰ (⋀A)**
  kComplemented,            // a: a ∨ a* ≠ 1
  kWeaklySubfit,            // a ≠ 0 with no c ≠ 1, c ∨ a = 1
  kSemiregular,             // a ≠ ⋁{b ∈ B_L : b ≤ a}
  kIrreducible,             // a ∈ B_L \ {0, 1}
  kLinear,                  // a, b incomparable
  kStrongDeMorgan,          // a, b: (a → b) ∨ (b → a) ≠ 1
  kMeetJoinDistributive,    // family A, b: (⋀A) → b ≰ ⋁(a → b)
  kHereditaryJoin,          // family A, b: ((⋁A) → b) → b ≰ ⋁((a → b) → b)
  kSublocaleFails,          // family = members of a sublocale failing the base property elements[0]
};

struct Witness {
  Law law = Law::kSecondDeMorgan;
  ElementSet family;
  std::vector<Element> elements;
};

/// Re-evaluates the violated law on the witness; true iff it still fails.
bool reproduces(const FiniteFrame& frame, const Witness& witness);
std::string describe(const FiniteFrame& frame, const Witness& witness);
std::string_view law_name(Law law);

/// One equivalent formulation of a property and its value on a frame.
/// `holds == nullopt` means the formulation was skipped (budget).
struct Characterization {
  std::string name;
  std::optional<bool> holds;
};

struct Verdict {
  bool holds = true;
  std::vector<Characterization> characterizations;
  std::optional<Witness> witness;

  /// Every evaluated characterization equals `holds`.
  bool agree() const;
  std::vector<std::string> disagreements() const;
};

struct FactCheck {
  std::string name;
  bool holds = true;
};

/// Evaluates properties of one frame, caching B_L and the sublocale lattice.
class PropertyEvaluator {
 public:
  /// Keeps a reference to `frame`, which must outlive the evaluator.
  explicit PropertyEvaluator(const FiniteFrame& frame, PropsConfig config = {});
  PropertyEvaluator(FiniteFrame&&, PropsConfig = {}) = delete;

  Verdict evaluate(Property p);

  Verdict ed();
  Verdict ied();
  Verdict idm();
  Verdict bot_scattered();
  Verdict boolean();
  Verdict weakly_subfit();
  Verdict semiregular();
  Verdict irreducible();
  Verdict linear();
  Verdict strong_de_morgan();
  /// prop must be one of kEd, kIed, kIdm, kBotScattered.
  Verdict hereditary(Property prop);

  /// The biconditionals tying the properties together; every entry must hold.
  std::vector<FactCheck> facts();

  const Sublocale& booleanization_set();
  /// nullptr when the sublocale budget was exceeded.
  const SublocaleLattice* sublocales();

 private:
  const FiniteFrame& frame_;
  PropsConfig config_;
  FamilyQuantifier quantifier_;
  std::optional<Sublocale> boolean_part_;
  std::optional<SubFrame> boolean_frame_;
  std::optional<std::optional<SublocaleLattice>> lattice_;

  const SubFrame& boolean_frame();
};

Verdict is_ed(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_ied(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_idm(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_bot_scattered(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_boolean(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_weakly_subfit(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_semiregular(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_irreducible(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_linear(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_strong_de_morgan(const FiniteFrame& frame, const PropsConfig& config = {});
Verdict is_hereditary(const FiniteFrame& frame, Property prop, const PropsConfig& config = {});
std::vector<FactCheck> check_facts(const FiniteFrame& frame, const PropsConfig& config = {});

/// Definitional tests only, for evaluating many subframes cheaply.
bool satisfies_ed(const FiniteFrame& frame, const FamilyQuantifier& q = FamilyQuantifier{12});
bool satisfies_ied(const FiniteFrame& frame, const FamilyQuantifier& q = FamilyQuantifier{12});
bool satisfies_idm(const FiniteFrame& frame, const FamilyQuantifier& q = FamilyQuantifier{12});
bool satisfies_bot_scattered(const FiniteFrame& frame, const FamilyQuantifier& q = FamilyQuantifier{12});
bool satisfies(const FiniteFrame& frame, Property base, const FamilyQuantifier& q = FamilyQuantifier{12});

class NotACover : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Each cover member meets only finitely many family members nontrivially.
/// On a finite frame this always holds once `cover` is a cover; the counts are
/// still computed. Throws NotACover when ⋁cover ≠ 1.
bool is_locally_finite(const FiniteFrame& frame, ElementSet family, ElementSet cover);

struct PropertyReport {
  std::string frame_id;
  int size = 0;
  std::vector<std::pair<Property, Verdict>> verdicts;
  std::vector<FactCheck> facts;

  const Verdict* find(Property p) const;
  bool holds(Property p) const;
  /// All characterizations agree and all facts hold.
  bool consistent() const;
  std::vector<std::string> problems() const;
};

PropertyReport evaluate_properties(const FiniteFrame& frame, std::string frame_id, const PropsConfig& config = {},
                                   std::span<const Property> which = kAllProperties);

}  // namespace localelab
