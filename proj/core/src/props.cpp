#include "localelab/props.hpp"

#include <array>
#include <map>
#include <sstream>

namespace localelab {

namespace {

using Values = std::array<Element, kMaxAggregates>;

struct NamedProperty {
  Property property;
  std::string_view name;
};

constexpr NamedProperty kNames[] = {
    {Property::kEd, "ed"},
    {Property::kIed, "ied"},
    {Property::kIdm, "idm"},
    {Property::kBotScattered, "bot_scattered"},
    {Property::kBoolean, "boolean"},
    {Property::kWeaklySubfit, "weakly_subfit"},
    {Property::kSemiregular, "semiregular"},
    {Property::kIrreducible, "irreducible"},
    {Property::kLinear, "linear"},
    {Property::kStrongDeMorgan, "strong_de_morgan"},
    {Property::kHereditaryEd, "hereditary_ed"},
    {Property::kHereditaryIed, "hereditary_ied"},
    {Property::kHereditaryIdm, "hereditary_idm"},
    {Property::kScattered, "scattered"},
};

// Family laws shared by several properties. Each returns a smallest violating
// nonempty family A ⊆ domain.
class FamilyLaws {
 public:
  FamilyLaws(const FiniteFrame& f, const FamilyQuantifier& q) : f_(f), q_(q) {}

  auto ps() const {
    return [this](Element a) { return f_.pseudo(a); };
  }
  auto dn() const {
    return [this](Element a) { return f_.double_neg(a); };
  }

  // (⋀A)* ≤ ⋁A*, or equality.
  std::optional<ElementSet> de_morgan(ElementSet domain, bool equality) const {
    std::array<Aggregate, 2> aggs{meet_of(f_), join_of(f_, ps())};
    return q_.counterexample(domain, aggs, [&](const Values& v) {
      Element lhs = f_.pseudo(v[0]);
      return equality ? lhs == v[1] : f_.leq(lhs, v[1]);
    });
  }
  // ⋀A = 0 ⟹ ⋁A* = 1.
  std::optional<ElementSet> zero_meet_covers(ElementSet domain) const {
    std::array<Aggregate, 2> aggs{meet_of(f_), join_of(f_, ps())};
    return q_.counterexample(domain, aggs,
                             [&](const Values& v) { return v[0] != f_.bottom() || v[1] == f_.top(); });
  }
  // (⋁A)** ≤ ⋁A**, or equality.
  std::optional<ElementSet> dn_joins(ElementSet domain, bool equality) const {
    std::array<Aggregate, 2> aggs{join_of(f_), join_of(f_, dn())};
    return q_.counterexample(domain, aggs, [&](const Values& v) {
      Element lhs = f_.double_neg(v[0]);
      return equality ? lhs == v[1] : f_.leq(lhs, v[1]);
    });
  }
  // ⋀A** ≤ (⋀A)**, or equality.
  std::optional<ElementSet> dn_meets(ElementSet domain, bool equality) const {
    std::array<Aggregate, 2> aggs{meet_of(f_), meet_of(f_, dn())};
    return q_.counterexample(domain, aggs, [&](const Values& v) {
      Element rhs = f_.double_neg(v[0]);
      return equality ? rhs == v[1] : f_.leq(v[1], rhs);
    });
  }
  // (⋁A)* = 0 ⟹ ⋁A** = 1.
  std::optional<ElementSet> dense_join_covers(ElementSet domain) const {
    std::array<Aggregate, 2> aggs{join_of(f_), join_of(f_, dn())};
    return q_.counterexample(domain, aggs,
                             [&](const Values& v) { return f_.pseudo(v[0]) != f_.bottom() || v[1] == f_.top(); });
  }
  // (⋀A)* ≤ (⋁A*)**.
  std::optional<ElementSet> meet_ps_below_dn(ElementSet domain) const {
    std::array<Aggregate, 2> aggs{meet_of(f_), join_of(f_, ps())};
    return q_.counterexample(domain, aggs,
                             [&](const Values& v) { return f_.leq(f_.pseudo(v[0]), f_.double_neg(v[1])); });
  }
  // ⋀A = 0 ⟹ ⋀A** = 0.
  std::optional<ElementSet> zero_meet_dn(ElementSet domain) const {
    std::array<Aggregate, 2> aggs{meet_of(f_), meet_of(f_, dn())};
    return q_.counterexample(domain, aggs,
                             [&](const Values& v) { return v[0] != f_.bottom() || v[1] == f_.bottom(); });
  }
  // (⋀A) → b ≤ ⋁(a → b) for nonempty A ⊆ domain(b).
  std::optional<std::pair<ElementSet, Element>> meet_join_distributive(bool restrict_to_closed) const {
    for (Element b = 0; b < f_.size(); ++b) {
      ElementSet domain = restrict_to_closed ? f_.up_set(b) : f_.elements();
      std::array<Aggregate, 2> aggs{meet_of(f_), join_of(f_, [&](Element a) { return f_.implies(a, b); })};
      auto fam = q_.counterexample(domain, aggs,
                                   [&](const Values& v) { return f_.leq(f_.implies(v[0], b), v[1]); });
      if (fam) return std::pair{*fam, b};
    }
    return std::nullopt;
  }
  // ((⋁A) → b) → b ≤ ⋁((a → b) → b).
  std::optional<std::pair<ElementSet, Element>> hereditary_join(bool restrict_to_closed) const {
    for (Element b = 0; b < f_.size(); ++b) {
      ElementSet domain = restrict_to_closed ? f_.up_set(b) : f_.elements();
      auto twice = [&](Element a) { return f_.implies(f_.implies(a, b), b); };
      std::array<Aggregate, 2> aggs{join_of(f_), join_of(f_, twice)};
      auto fam = q_.counterexample(domain, aggs, [&](const Values& v) { return f_.leq(twice(v[0]), v[1]); });
      if (fam) return std::pair{*fam, b};
    }
    return std::nullopt;
  }
  std::optional<std::pair<Element, Element>> strong_de_morgan() const {
    for (Element a = 0; a < f_.size(); ++a)
      for (Element b = a + 1; b < f_.size(); ++b)
        if (f_.join(f_.implies(a, b), f_.implies(b, a)) != f_.top()) return std::pair{a, b};
    return std::nullopt;
  }

 private:
  const FiniteFrame& f_;
  const FamilyQuantifier& q_;
};

// Aggregate folding with a subframe's meet or join, expressed on parent indices.
Aggregate fold_in(const FiniteFrame& f, const SubFrame& sub, bool meet, const std::function<Element(Element)>& map) {
  Aggregate agg = meet ? meet_of(f, map) : join_of(f, map);
  for (Element x : sub.lift(sub.frame.elements()))
    for (Element y : sub.lift(sub.frame.elements())) {
      Element lx = sub.lower(x);
      Element ly = sub.lower(y);
      agg.op[static_cast<std::size_t>(x) * static_cast<std::size_t>(agg.n) + static_cast<std::size_t>(y)] =
          sub.lift(meet ? sub.frame.meet(lx, ly) : sub.frame.join(lx, ly));
    }
  return agg;
}

bool closed_under_joins(const FiniteFrame& f, ElementSet s) {
  if (!s.contains(f.bottom())) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(f.join(a, b))) return false;
  return true;
}

bool closed_under_meets(const FiniteFrame& f, ElementSet s) {
  if (!s.contains(f.top())) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(f.meet(a, b))) return false;
  return true;
}

std::optional<Element> opening_element(const FiniteFrame& f, ElementSet target) {
  for (Element a = 0; a < f.size(); ++a)
    if (open_sublocale(f, a).members == target) return a;
  return std::nullopt;
}

Witness family_witness(Law law, ElementSet family) { return Witness{law, family, {}}; }

class VerdictBuilder {
 public:
  void add(std::string name, std::optional<bool> holds) { v_.characterizations.push_back({std::move(name), holds}); }
  void add_absent(std::string name, bool counterexample_found) { add(std::move(name), !counterexample_found); }
  Verdict finish(bool holds, std::optional<Witness> witness) {
    v_.holds = holds;
    if (!holds) v_.witness = std::move(witness);
    return std::move(v_);
  }

 private:
  Verdict v_;
};

bool dn_is_complete_heyting_endomorphism(const FiniteFrame& f, const FamilyLaws& laws) {
  if (laws.dn_meets(f.elements(), true) || laws.dn_joins(f.elements(), true)) return false;
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b)
      if (f.double_neg(f.implies(a, b)) != f.implies(f.double_neg(a), f.double_neg(b))) return false;
  return true;
}

}  // namespace

std::string_view property_name(Property p) {
  for (const auto& n : kNames)
    if (n.property == p) return n.name;
  return "?";
}

std::optional<Property> property_from_name(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.property;
  return std::nullopt;
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::kSecondDeMorgan: return "second De Morgan law";
    case Law::kDoubleNegationJoins: return "(-)** preserves joins";
    case Law::kDoubleNegationMeets: return "(-)** preserves meets";
    case Law::kComplemented: return "a v a* = 1";
    case Law::kWeaklySubfit: return "weak subfitness";
    case Law::kSemiregular: return "a is a join of regular elements";
    case Law::kIrreducible: return "B_L = {0,1}";
    case Law::kLinear: return "total order";
    case Law::kStrongDeMorgan: return "strong De Morgan law";
    case Law::kMeetJoinDistributive: return "(/\\A) -> b <= \\/(a -> b)";
    case Law::kHereditaryJoin: return "((\\/A) -> b) -> b <= \\/((a -> b) -> b)";
    case Law::kSublocaleFails: return "sublocale fails the property";
  }
  return "?";
}

bool reproduces(const FiniteFrame& f, const Witness& w) {
  auto elem = [&](std::size_t i) { return w.elements.at(i); };
  switch (w.law) {
    case Law::kSecondDeMorgan: {
      Element rhs = f.bottom();
      for (Element a : w.family) rhs = f.join(rhs, f.pseudo(a));
      return !w.family.empty() && !f.leq(f.pseudo(f.meet_all(w.family)), rhs);
    }
    case Law::kDoubleNegationJoins: {
      Element rhs = f.bottom();
      for (Element a : w.family) rhs = f.join(rhs, f.double_neg(a));
      return !w.family.empty() && !f.leq(f.double_neg(f.join_all(w.family)), rhs);
    }
    case Law::kDoubleNegationMeets: {
      Element lhs = f.top();
      for (Element a : w.family) lhs = f.meet(lhs, f.double_neg(a));
      return !w.family.empty() && !f.leq(lhs, f.double_neg(f.meet_all(w.family)));
    }
    case Law::kComplemented: return f.join(elem(0), f.pseudo(elem(0))) != f.top();
    case Law::kWeaklySubfit: {
      Element a = elem(0);
      if (a == f.bottom()) return false;
      for (Element c = 0; c < f.size(); ++c)
        if (c != f.top() && f.join(c, a) == f.top()) return false;
      return true;
    }
    case Law::kSemiregular: {
      Element a = elem(0);
      Element acc = f.bottom();
      for (Element b = 0; b < f.size(); ++b)
        if (f.double_neg(b) == b && f.leq(b, a)) acc = f.join(acc, b);
      return acc != a;
    }
    case Law::kIrreducible: {
      Element a = elem(0);
      return f.double_neg(a) == a && a != f.bottom() && a != f.top();
    }
    case Law::kLinear: return !f.leq(elem(0), elem(1)) && !f.leq(elem(1), elem(0));
    case Law::kStrongDeMorgan:
      return f.join(f.implies(elem(0), elem(1)), f.implies(elem(1), elem(0))) != f.top();
    case Law::kMeetJoinDistributive: {
      Element b = elem(0);
      Element rhs = f.bottom();
      for (Element a : w.family) rhs = f.join(rhs, f.implies(a, b));
      return !w.family.empty() && !f.leq(f.implies(f.meet_all(w.family), b), rhs);
    }
    case Law::kHereditaryJoin: {
      Element b = elem(0);
      auto twice = [&](Element a) { return f.implies(f.implies(a, b), b); };
      Element rhs = f.bottom();
      for (Element a : w.family) rhs = f.join(rhs, twice(a));
      return !w.family.empty() && !f.leq(twice(f.join_all(w.family)), rhs);
    }
    case Law::kSublocaleFails: {
      if (!is_sublocale(f, w.family)) return false;
      SubFrame sub = sub_frame_structure(f, Sublocale{w.family});
      return !satisfies(sub.frame, static_cast<Property>(elem(0)));
    }
  }
  return false;
}

std::string describe(const FiniteFrame& f, const Witness& w) {
  std::ostringstream out;
  out << law_name(w.law) << " fails";
  if (!w.family.empty()) {
    out << " for {";
    bool first = true;
    for (Element a : w.family) {
      out << (first ? "" : ", ") << f.label(a);
      first = false;
    }
    out << "}";
  }
  if (w.law == Law::kSublocaleFails) {
    out << " (" << property_name(static_cast<Property>(w.elements.at(0))) << ")";
  } else if (!w.elements.empty()) {
    out << " at";
    for (Element e : w.elements) out << " " << f.label(e);
  }
  return out.str();
}

bool Verdict::agree() const {
  for (const auto& c : characterizations)
    if (c.holds && *c.holds != holds) return false;
  return true;
}

std::vector<std::string> Verdict::disagreements() const {
  std::vector<std::string> out;
  for (const auto& c : characterizations)
    if (c.holds && *c.holds != holds) out.push_back(c.name);
  return out;
}

bool satisfies_ed(const FiniteFrame& f, const FamilyQuantifier& q) {
  return !FamilyLaws(f, q).de_morgan(f.elements(), false);
}
// On a finite frame every family is finite, so the infinite law is checked on
// the same set of families as the finite one.
bool satisfies_idm(const FiniteFrame& f, const FamilyQuantifier& q) {
  return !FamilyLaws(f, q).de_morgan(f.elements(), false);
}
bool satisfies_ied(const FiniteFrame& f, const FamilyQuantifier& q) {
  return !FamilyLaws(f, q).dn_joins(f.elements(), false);
}
bool satisfies_bot_scattered(const FiniteFrame& f, const FamilyQuantifier& q) {
  return !FamilyLaws(f, q).dn_meets(f.elements(), false);
}
bool satisfies(const FiniteFrame& f, Property base, const FamilyQuantifier& q) {
  switch (base) {
    case Property::kEd: return satisfies_ed(f, q);
    case Property::kIed: return satisfies_ied(f, q);
    case Property::kIdm: return satisfies_idm(f, q);
    case Property::kBotScattered: return satisfies_bot_scattered(f, q);
    default: throw std::invalid_argument("satisfies: only ed, ied, idm and bot_scattered are supported");
  }
}

bool is_locally_finite(const FiniteFrame& f, ElementSet family, ElementSet cover) {
  if (f.join_all(cover) != f.top()) throw NotACover("cover does not join to top");
  for (Element b : cover) {
    int meeting = 0;
    for (Element a : family)
      if (f.meet(a, b) != f.bottom()) ++meeting;
    if (meeting > f.size()) return false;
  }
  return true;
}

PropertyEvaluator::PropertyEvaluator(const FiniteFrame& frame, PropsConfig config)
    : frame_(frame), config_(config), quantifier_(config.subset_quantification_bound) {}

const Sublocale& PropertyEvaluator::booleanization_set() {
  if (!boolean_part_) boolean_part_ = booleanization(frame_);
  return *boolean_part_;
}

const SubFrame& PropertyEvaluator::boolean_frame() {
  if (!boolean_frame_) boolean_frame_ = sub_frame_structure(frame_, booleanization_set());
  return *boolean_frame_;
}

const SublocaleLattice* PropertyEvaluator::sublocales() {
  if (!lattice_) {
    try {
      lattice_.emplace(enumerate_sublocales(frame_, config_.sublocale_budget));
    } catch (const BudgetExceeded&) {
      lattice_.emplace(std::nullopt);
    }
  }
  return lattice_->has_value() ? &**lattice_ : nullptr;
}

Verdict PropertyEvaluator::evaluate(Property p) {
  switch (p) {
    case Property::kEd: return ed();
    case Property::kIed: return ied();
    case Property::kIdm: return idm();
    case Property::kBotScattered: return bot_scattered();
    case Property::kBoolean: return boolean();
    case Property::kWeaklySubfit: return weakly_subfit();
    case Property::kSemiregular: return semiregular();
    case Property::kIrreducible: return irreducible();
    case Property::kLinear: return linear();
    case Property::kStrongDeMorgan: return strong_de_morgan();
    case Property::kHereditaryEd: return hereditary(Property::kEd);
    case Property::kHereditaryIed: return hereditary(Property::kIed);
    case Property::kHereditaryIdm: return hereditary(Property::kIdm);
    case Property::kScattered: return hereditary(Property::kBotScattered);
  }
  throw std::invalid_argument("unknown property");
}

Verdict PropertyEvaluator::ed() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  const ElementSet all = f.elements();
  const ElementSet regular = booleanization_set().members;
  VerdictBuilder v;

  auto def = laws.de_morgan(all, false);
  v.add_absent("(/\\A)* <= \\/A* for finite A", def.has_value());
  v.add_absent("(/\\A)* = \\/A* for finite A", laws.de_morgan(all, true).has_value());
  v.add_absent("/\\A = 0 implies \\/A* = 1 for finite A", laws.zero_meet_covers(all).has_value());
  v.add_absent("(\\/A)** <= \\/A** for finite A", laws.dn_joins(all, false).has_value());
  v.add_absent("(\\/A)** = \\/A** for finite A", laws.dn_joins(all, true).has_value());

  bool binary_de_morgan = true;
  bool dn_binary_joins = f.double_neg(f.bottom()) == f.bottom();
  bool dn_lattice_hom = dn_binary_joins;
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b) {
      if (f.pseudo(f.meet(a, b)) != f.join(f.pseudo(a), f.pseudo(b))) binary_de_morgan = false;
      bool joins = f.double_neg(f.join(a, b)) == f.join(f.double_neg(a), f.double_neg(b));
      bool meets = f.double_neg(f.meet(a, b)) == f.meet(f.double_neg(a), f.double_neg(b));
      dn_binary_joins = dn_binary_joins && joins;
      dn_lattice_hom = dn_lattice_hom && joins && meets;
    }
  v.add("(a ^ b)* = a* v b*", binary_de_morgan);
  v.add("(-)** preserves finite joins", dn_binary_joins);
  v.add("(-)** is a lattice homomorphism", dn_lattice_hom);
  v.add_absent("(/\\A)* <= \\/A* for finite A in B_L", laws.de_morgan(regular, false).has_value());
  v.add_absent("(/\\A)* = \\/A* for finite A in B_L", laws.de_morgan(regular, true).has_value());
  v.add_absent("(\\/A)* = 0 implies \\/A** = 1 for finite A", laws.dense_join_covers(all).has_value());

  std::optional<Witness> w;
  if (def) w = family_witness(Law::kSecondDeMorgan, *def);
  return v.finish(!def, w);
}

Verdict PropertyEvaluator::idm() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  const ElementSet all = f.elements();
  const ElementSet regular = booleanization_set().members;
  VerdictBuilder v;

  auto def = laws.de_morgan(all, false);
  v.add_absent("(/\\A)* <= \\/A* for all families", def.has_value());
  v.add_absent("/\\A = 0 implies \\/A* = 1 for all families", laws.zero_meet_covers(all).has_value());
  const bool open = opening_element(f, regular).has_value();
  const bool subframe = closed_under_joins(f, regular) && closed_under_meets(f, regular);
  v.add("B_L is an open sublocale and a subframe", open && subframe);
  v.add("B_L is open and a complete sublattice", open && closed_under_joins(f, regular) && closed_under_meets(f, regular));
  v.add("(-)** is a complete Heyting algebra endomorphism", dn_is_complete_heyting_endomorphism(f, laws));

  std::optional<Witness> w;
  if (def) w = family_witness(Law::kSecondDeMorgan, *def);
  return v.finish(!def, w);
}

Verdict PropertyEvaluator::ied() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  const ElementSet all = f.elements();
  const ElementSet regular = booleanization_set().members;
  VerdictBuilder v;

  auto def = laws.dn_joins(all, false);
  v.add_absent("(\\/A)** <= \\/A** for all families", def.has_value());
  v.add_absent("(-)** preserves arbitrary joins", laws.dn_joins(all, true).has_value());

  bool binary_meets = f.double_neg(f.top()) == f.top();
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b)
      if (f.double_neg(f.meet(a, b)) != f.meet(f.double_neg(a), f.double_neg(b))) binary_meets = false;
  v.add("(-)** is a frame homomorphism L -> L", !laws.dn_joins(all, true) && binary_meets);
  v.add_absent("(/\\A)* <= \\/A* for all families in B_L", laws.de_morgan(regular, false).has_value());
  v.add_absent("(\\/A)* = 0 implies \\/A** = 1", laws.dense_join_covers(all).has_value());

  // B_L closed under arbitrary joins (every subset of B_L, not only pairs) and finite meets.
  std::array<Aggregate, 1> joins{join_of(f)};
  bool join_closed =
      regular.contains(f.bottom()) &&
      !quantifier_.counterexample(regular, joins, [&](const Values& x) { return regular.contains(x[0]); });
  v.add("B_L is a subframe", join_closed && closed_under_meets(f, regular));

  std::optional<Witness> w;
  if (def) w = family_witness(Law::kDoubleNegationJoins, *def);
  return v.finish(!def, w);
}

Verdict PropertyEvaluator::bot_scattered() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  const ElementSet all = f.elements();
  const ElementSet regular = booleanization_set().members;
  const SubFrame& bf = boolean_frame();
  VerdictBuilder v;

  auto def = laws.dn_meets(all, false);
  v.add_absent("/\\A** <= (/\\A)** for all families", def.has_value());
  v.add_absent("(-)** preserves arbitrary meets", laws.dn_meets(all, true).has_value());

  auto dn = laws.dn();
  std::array<Aggregate, 2> into_b_meets{meet_of(f), fold_in(f, bf, true, dn)};
  const bool meets_in_b = !quantifier_.counterexample(
      all, into_b_meets, [&](const Values& x) { return f.double_neg(x[0]) == x[1]; });
  v.add("(-)**: L -> B_L preserves arbitrary meets", meets_in_b);

  std::array<Aggregate, 2> into_b_joins{join_of(f), fold_in(f, bf, false, dn)};
  const bool joins_in_b = !quantifier_.counterexample(
      all, into_b_joins, [&](const Values& x) { return f.double_neg(x[0]) == x[1]; });
  bool arrows_in_b = true;
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b) {
      Element local = bf.frame.implies(bf.lower(f.double_neg(a)), bf.lower(f.double_neg(b)));
      if (f.double_neg(f.implies(a, b)) != bf.lift(local)) arrows_in_b = false;
    }
  v.add("(-)**: L -> B_L is a complete Heyting algebra homomorphism", meets_in_b && joins_in_b && arrows_in_b);
  v.add_absent("(/\\A)* <= (\\/A*)** for all families", laws.meet_ps_below_dn(all).has_value());
  v.add_absent("/\\A = 0 implies /\\A** = 0 for all families", laws.zero_meet_dn(all).has_value());

  bool dense_open_scattered = false;
  for (Element a = 0; a < f.size() && !dense_open_scattered; ++a) {
    if (f.pseudo(a) != f.bottom()) continue;  // o(a) dense iff a* = 0
    SubFrame open = sub_frame_structure(f, open_sublocale(f, a));
    dense_open_scattered = satisfies_bot_scattered(open.frame, quantifier_);
  }
  v.add("some open dense sublocale is bot-scattered", dense_open_scattered);
  v.add("B_L is an open sublocale", opening_element(f, regular).has_value());

  std::optional<bool> interiors;
  if (const SublocaleLattice* lattice = sublocales()) {
    interiors = true;
    for (const Sublocale& s : lattice->members())
      if (is_dense(f, s) && !is_dense(f, interior(f, s))) interiors = false;
  }
  v.add("the interior of every dense sublocale is dense", interiors);

  std::optional<Witness> w;
  if (def) w = family_witness(Law::kDoubleNegationMeets, *def);
  return v.finish(!def, w);
}

Verdict PropertyEvaluator::boolean() {
  const FiniteFrame& f = frame_;
  VerdictBuilder v;
  std::optional<Element> uncomplemented;
  bool regular = true;
  for (Element a = 0; a < f.size(); ++a) {
    if (!uncomplemented && f.join(a, f.pseudo(a)) != f.top()) uncomplemented = a;
    if (f.double_neg(a) != a) regular = false;
  }
  v.add("a v a* = 1 for all a", !uncomplemented);
  v.add("a** = a for all a", regular);
  std::optional<Witness> w;
  if (uncomplemented) w = Witness{Law::kComplemented, {}, {*uncomplemented}};
  return v.finish(!uncomplemented, w);
}

Verdict PropertyEvaluator::weakly_subfit() {
  const FiniteFrame& f = frame_;
  VerdictBuilder v;
  std::optional<Element> bad;
  bool formula = true;
  for (Element a = 0; a < f.size(); ++a) {
    ElementSet supplements;
    for (Element c = 0; c < f.size(); ++c)
      if (f.join(c, a) == f.top()) supplements.insert(c);
    if (f.pseudo(a) != f.meet_all(supplements)) formula = false;
    if (!bad && a != f.bottom() && (supplements - ElementSet::singleton(f.top())).empty()) bad = a;
  }
  v.add("every a != 0 has some c != 1 with c v a = 1", !bad);
  v.add("a* = /\\{c : c v a = 1} for all a", formula);
  std::optional<Witness> w;
  if (bad) w = Witness{Law::kWeaklySubfit, {}, {*bad}};
  return v.finish(!bad, w);
}

Verdict PropertyEvaluator::semiregular() {
  const FiniteFrame& f = frame_;
  const ElementSet regular = booleanization_set().members;
  VerdictBuilder v;
  std::optional<Element> bad;
  bool via_pseudocomplements = true;
  for (Element a = 0; a < f.size(); ++a) {
    if (!bad && f.join_all(regular & f.down_set(a)) != a) bad = a;
    ElementSet below;
    for (Element c = 0; c < f.size(); ++c)
      if (f.leq(f.pseudo(c), a)) below.insert(f.pseudo(c));
    if (f.join_all(below) != a) via_pseudocomplements = false;
  }
  v.add("a = \\/{b in B_L : b <= a} for all a", !bad);
  v.add("every element is a join of pseudocomplements", via_pseudocomplements);
  std::optional<Witness> w;
  if (bad) w = Witness{Law::kSemiregular, {}, {*bad}};
  return v.finish(!bad, w);
}

Verdict PropertyEvaluator::irreducible() {
  const FiniteFrame& f = frame_;
  const ElementSet regular = booleanization_set().members;
  VerdictBuilder v;
  const ElementSet trivial{f.bottom(), f.top()};
  std::optional<Element> bad;
  for (Element a : regular)
    if (!trivial.contains(a)) {
      bad = a;
      break;
    }
  bool prime_zero = true;
  for (Element a = 0; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b)
      if (f.meet(a, b) == f.bottom() && a != f.bottom() && b != f.bottom()) prime_zero = false;
  v.add("B_L = {0, 1}", !bad);
  v.add("0 is prime", prime_zero);
  std::optional<Witness> w;
  if (bad) w = Witness{Law::kIrreducible, {}, {*bad}};
  return v.finish(!bad, w);
}

Verdict PropertyEvaluator::linear() {
  const FiniteFrame& f = frame_;
  VerdictBuilder v;
  std::optional<std::pair<Element, Element>> bad;
  for (Element a = 0; a < f.size() && !bad; ++a)
    for (Element b = a + 1; b < f.size() && !bad; ++b)
      if (!f.leq(a, b) && !f.leq(b, a)) bad = std::pair{a, b};
  v.add("any two elements are comparable", !bad);
  // Equivalent on frames: the cover graph is a path, i.e. |covers| = n - 1 and
  // every element has at most one upper cover.
  const auto covers = f.covers();
  bool path = static_cast<int>(covers.size()) == f.size() - 1;
  std::vector<int> upper(static_cast<std::size_t>(f.size()), 0);
  for (const auto& [lo, hi] : covers) path = path && ++upper[static_cast<std::size_t>(lo)] <= 1;
  v.add("the Hasse diagram is a path", path);
  std::optional<Witness> w;
  if (bad) w = Witness{Law::kLinear, {}, {bad->first, bad->second}};
  return v.finish(!bad, w);
}

Verdict PropertyEvaluator::strong_de_morgan() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  VerdictBuilder v;
  auto pair = laws.strong_de_morgan();
  v.add("(a -> b) v (b -> a) = 1", !pair);
  v.add_absent("(/\\A) -> b <= \\/(a -> b) for finite A", laws.meet_join_distributive(false).has_value());
  v.add_absent("(/\\A) -> b <= \\/(a -> b) for finite A in c(b)", laws.meet_join_distributive(true).has_value());
  v.add_absent("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for finite A", laws.hereditary_join(false).has_value());
  v.add_absent("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for finite A in c(b)",
               laws.hereditary_join(true).has_value());
  std::optional<Witness> w;
  if (pair) w = Witness{Law::kStrongDeMorgan, {}, {pair->first, pair->second}};
  return v.finish(!pair, w);
}

Verdict PropertyEvaluator::hereditary(Property base) {
  const FiniteFrame& f = frame_;
  if (base != Property::kEd && base != Property::kIed && base != Property::kIdm && base != Property::kBotScattered)
    throw std::invalid_argument("hereditary: base must be ed, ied, idm or bot_scattered");
  const std::string base_name(property_name(base));
  FamilyLaws laws(f, quantifier_);
  VerdictBuilder v;
  std::optional<Witness> w;

  std::optional<bool> every;
  if (const SublocaleLattice* lattice = sublocales()) {
    every = true;
    for (const Sublocale& s : lattice->members()) {
      SubFrame sub = sub_frame_structure(f, s);
      if (!satisfies(sub.frame, base, quantifier_)) {
        every = false;
        w = Witness{Law::kSublocaleFails, s.members, {static_cast<Element>(base)}};
        break;
      }
    }
  }
  v.add("every sublocale is " + base_name, every);

  bool closed = true;
  std::optional<Witness> closed_witness;
  for (Element b = 0; b < f.size() && closed; ++b) {
    Sublocale c = closed_sublocale(f, b);
    if (!satisfies(sub_frame_structure(f, c).frame, base, quantifier_)) {
      closed = false;
      closed_witness = Witness{Law::kSublocaleFails, c.members, {static_cast<Element>(base)}};
    }
  }
  v.add("every closed sublocale is " + base_name, closed);

  // Formula characterizations; their counterexamples are the preferred witnesses.
  std::optional<Witness> formula_witness;
  auto note = [&](std::optional<Witness> candidate) {
    if (!formula_witness && candidate) formula_witness = std::move(candidate);
  };
  auto meet_join = [&](bool closed_only) {
    auto cex = laws.meet_join_distributive(closed_only);
    if (cex) note(Witness{Law::kMeetJoinDistributive, cex->first, {cex->second}});
    return !cex;
  };
  auto join_twice = [&](bool closed_only) {
    auto cex = laws.hereditary_join(closed_only);
    if (cex) note(Witness{Law::kHereditaryJoin, cex->first, {cex->second}});
    return !cex;
  };

  switch (base) {
    case Property::kEd: {
      auto pair = laws.strong_de_morgan();
      if (pair) note(Witness{Law::kStrongDeMorgan, {}, {pair->first, pair->second}});
      v.add("(a -> b) v (b -> a) = 1", !pair);
      v.add("(/\\A) -> b <= \\/(a -> b) for finite A", meet_join(false));
      v.add("(/\\A) -> b <= \\/(a -> b) for finite A in c(b)", meet_join(true));
      v.add("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for finite A", join_twice(false));
      v.add("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for finite A in c(b)", join_twice(true));
      break;
    }
    case Property::kIdm:
      v.add("(/\\A) -> b <= \\/(a -> b) for all families", meet_join(false));
      v.add("(/\\A) -> b <= \\/(a -> b) for all families in c(b)", meet_join(true));
      break;
    case Property::kIed:
      v.add("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for all families", join_twice(false));
      v.add("((\\/A) -> b) -> b <= \\/((a -> b) -> b) for all families in c(b)", join_twice(true));
      break;
    default: break;
  }

  const bool holds = every.value_or(closed);
  if (formula_witness) w = formula_witness;
  if (!w) w = closed_witness;
  return v.finish(holds, w);
}

std::vector<FactCheck> PropertyEvaluator::facts() {
  const FiniteFrame& f = frame_;
  FamilyLaws laws(f, quantifier_);
  const bool boolean_ = boolean().holds;
  const bool subfit = weakly_subfit().holds;
  const bool idm_ = idm().holds;
  const bool ied_ = ied().holds;
  const bool ed_ = ed().holds;
  const bool bot = bot_scattered().holds;
  const bool semireg = semiregular().holds;
  const bool irreducible_ = irreducible().holds;
  const bool linear_ = linear().holds;
  const bool strong = strong_de_morgan().holds;
  const bool h_ed = hereditary(Property::kEd).holds;
  const bool h_ied = hereditary(Property::kIed).holds;
  const bool h_idm = hereditary(Property::kIdm).holds;
  const bool scattered = hereditary(Property::kBotScattered).holds;
  const bool dn_chh = dn_is_complete_heyting_endomorphism(f, laws);
  const ElementSet regular = booleanization_set().members;
  const bool b_locally_finite = is_locally_finite(f, regular, ElementSet::singleton(f.top()));

  auto implies = [](bool p, bool q) { return !p || q; };
  return {
      {"complete Boolean iff weakly subfit and IDM", boolean_ == (subfit && idm_)},
      {"IDM iff bot-scattered and IED", idm_ == (bot && ied_)},
      {"complete Boolean iff semiregular and IED", boolean_ == (semireg && ied_)},
      {"IDM iff (-)** is a complete Heyting algebra homomorphism", idm_ == dn_chh},
      {"finite collapse: ED iff IED iff IDM", ed_ == ied_ && ied_ == idm_},
      {"Boolean => IDM => IED => ED", implies(boolean_, idm_) && implies(idm_, ied_) && implies(ied_, ed_)},
      {"Boolean => bot-scattered and IDM => bot-scattered", implies(boolean_, bot) && implies(idm_, bot)},
      {"irreducible => IED", implies(irreducible_, ied_)},
      {"linear => hereditarily IED", implies(linear_, h_ied)},
      {"ED with locally finite B_L => IED", implies(ed_ && b_locally_finite, ied_)},
      {"strong De Morgan iff hereditarily ED", strong == h_ed},
      {"hereditarily IDM iff scattered and hereditarily IED", h_idm == (scattered && h_ied)},
      {"hereditary P => P", implies(h_ed, ed_) && implies(h_ied, ied_) && implies(h_idm, idm_) &&
                                implies(scattered, bot)},
  };
}

Verdict is_ed(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).ed(); }
Verdict is_ied(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).ied(); }
Verdict is_idm(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).idm(); }
Verdict is_bot_scattered(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).bot_scattered(); }
Verdict is_boolean(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).boolean(); }
Verdict is_weakly_subfit(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).weakly_subfit(); }
Verdict is_semiregular(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).semiregular(); }
Verdict is_irreducible(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).irreducible(); }
Verdict is_linear(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).linear(); }
Verdict is_strong_de_morgan(const FiniteFrame& f, const PropsConfig& c) {
  return PropertyEvaluator(f, c).strong_de_morgan();
}
Verdict is_hereditary(const FiniteFrame& f, Property prop, const PropsConfig& c) {
  return PropertyEvaluator(f, c).hereditary(prop);
}
std::vector<FactCheck> check_facts(const FiniteFrame& f, const PropsConfig& c) { return PropertyEvaluator(f, c).facts(); }

const Verdict* PropertyReport::find(Property p) const {
  for (const auto& [prop, verdict] : verdicts)
    if (prop == p) return &verdict;
  return nullptr;
}

bool PropertyReport::holds(Property p) const {
  const Verdict* v = find(p);
  if (!v) throw std::out_of_range("property not evaluated: " + std::string(property_name(p)));
  return v->holds;
}

std::vector<std::string> PropertyReport::problems() const {
  std::vector<std::string> out;
  for (const auto& [prop, verdict] : verdicts) {
    for (const auto& name : verdict.disagreements())
      out.push_back(std::string(property_name(prop)) + ": characterization disagrees: " + name);
    if (!verdict.holds && !verdict.witness) out.push_back(std::string(property_name(prop)) + ": false without witness");
  }
  for (const auto& fact : facts)
    if (!fact.holds) out.push_back("fact fails: " + fact.name);
  return out;
}

bool PropertyReport::consistent() const { return problems().empty(); }

PropertyReport evaluate_properties(const FiniteFrame& frame, std::string frame_id, const PropsConfig& config,
                                   std::span<const Property> which) {
  PropertyEvaluator evaluator(frame, config);
  PropertyReport report;
  report.frame_id = std::move(frame_id);
  report.size = frame.size();
  for (Property p : which) report.verdicts.emplace_back(p, evaluator.evaluate(p));
  report.facts = evaluator.facts();
  return report;
}

}  // namespace localelab
