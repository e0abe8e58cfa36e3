#include "localelab/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "localelab/constructions.hpp"

namespace localelab::symbolic {

namespace {

using Tag = Element::Tag;

void same_frame(const Element& a, const Element& b) {
  if (a.kind() != b.kind()) throw MixedFrames("elements of different symbolic frames: " + a.to_string() + ", " + b.to_string());
}

// Position in the ω-chain: Zero < Nat(1) < Nat(2) < ... < Infinity.
int compare_chain(const Element& a, const Element& b) {
  auto rank = [](const Element& e) { return e.tag() == Tag::kZero ? 0 : e.tag() == Tag::kNat ? 1 : 2; };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.tag() != Tag::kNat || a.nat_value() == b.nat_value()) return 0;
  return a.nat_value() < b.nat_value() ? -1 : 1;
}

int compare_linear(const Element& a, const Element& b) {
  if (a.kind() == Kind::kInterval) return a.value() < b.value() ? -1 : (a.value() == b.value() ? 0 : 1);
  return compare_chain(a, b);
}

std::vector<long> set_union(const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<long> set_intersection(const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<long> set_difference(const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<long> segment(long last) {
  std::vector<long> out;
  for (long i = 0; i <= last; ++i) out.push_back(i);
  return out;
}

Rational power_of_two(std::size_t i) {
  boost::multiprecision::cpp_int p = 1;
  p <<= static_cast<unsigned>(i);
  return Rational(p);
}

Element meet_prefix(const PresentedFamily& f, std::size_t k) {
  Element m = f.member(0);
  for (std::size_t i = 1; i < k; ++i) m = meet(m, f.member(i));
  return m;
}

Element join_prefix(const PresentedFamily& f, std::size_t k) {
  Element j = f.member(0);
  for (std::size_t i = 1; i < k; ++i) j = join(j, f.member(i));
  return j;
}

bool lt(const Element& a, const Element& b) { return leq(a, b) && !(a == b); }

// Representatives of every case in the pseudocomplement rules.
std::vector<Element> representatives(Kind kind) {
  switch (kind) {
    case Kind::kCofinite:
      return {Element::empty_open(), Element::cofin_open({}), Element::cofin_open({0}), Element::cofin_open({0, 1}),
              Element::cofin_open({3, 7})};
    case Kind::kOmegaChain:
      return {Element::zero(), Element::nat(1), Element::nat(2), Element::nat(7), Element::infinity()};
    case Kind::kInterval:
      return {Element::rat(0), Element::rat(Rational(1, 3)), Element::rat(Rational(1, 2)), Element::rat(1)};
  }
  return {};
}

// An element that is neither 0 nor 1.
Element middle(Kind kind) {
  switch (kind) {
    case Kind::kCofinite: return Element::cofin_open({0});
    case Kind::kOmegaChain: return Element::nat(1);
    case Kind::kInterval: return Element::rat(Rational(1, 2));
  }
  return Element::zero();
}

// The catalog family used to refute IDM and ⊥-scatteredness, or nullopt when
// bottom is completely prime (no such family exists).
std::optional<PresentedFamily> vanishing_family(Kind kind) {
  switch (kind) {
    case Kind::kCofinite: return PresentedFamily::initial_segments();
    case Kind::kInterval: return PresentedFamily::decreasing_to(0, 1);
    case Kind::kOmegaChain: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<PresentedFamily> sample_families(Kind kind) {
  switch (kind) {
    case Kind::kCofinite:
      return {PresentedFamily::initial_segments(),
              PresentedFamily::finite({Element::cofin_open({0}), Element::cofin_open({1})}),
              PresentedFamily::finite({Element::empty_open(), Element::cofin_open({2})})};
    case Kind::kOmegaChain:
      return {PresentedFamily::nat_ascending(1), PresentedFamily::nat_ascending(5),
              PresentedFamily::finite({Element::nat(2), Element::nat(5)}),
              PresentedFamily::finite({Element::zero(), Element::nat(3)})};
    case Kind::kInterval:
      return {PresentedFamily::decreasing_to(0, 1), PresentedFamily::decreasing_to(Rational(1, 3), 1),
              PresentedFamily::increasing_to(1, Rational(1, 4)),
              PresentedFamily::finite({Element::rat(Rational(1, 3)), Element::rat(Rational(1, 2))})};
  }
  return {};
}

// (⋀A)* ≤ ⋁{a*} evaluated on a presented family.
bool second_de_morgan(const PresentedFamily& f, std::size_t depth) {
  return leq(pseudo(family_meet(f, depth)), family_join(map_family(f, Pointwise::kPseudo), depth));
}

// ⋀{a**} ≤ (⋀A)**.
bool double_negation_meets(const PresentedFamily& f, std::size_t depth) {
  return leq(family_meet(map_family(f, Pointwise::kDoubleNeg), depth), double_neg(family_meet(f, depth)));
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kCofinite: return "cofinite";
    case Kind::kOmegaChain: return "omega-chain";
    case Kind::kInterval: return "interval";
  }
  return "?";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (Kind k : {Kind::kCofinite, Kind::kOmegaChain, Kind::kInterval})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Element Element::empty_open() { return Element{}; }

Element Element::cofin_open(std::vector<long> complement) {
  std::sort(complement.begin(), complement.end());
  complement.erase(std::unique(complement.begin(), complement.end()), complement.end());
  if (!complement.empty() && complement.front() < 0) throw std::invalid_argument("cofinite: negative point");
  Element e;
  e.tag_ = Tag::kCofinOpen;
  e.complement_ = std::move(complement);
  return e;
}

Element Element::zero() {
  Element e;
  e.tag_ = Tag::kZero;
  return e;
}

Element Element::nat(long n) {
  if (n < 1) throw std::invalid_argument("omega-chain: Nat(n) needs n >= 1");
  Element e;
  e.tag_ = Tag::kNat;
  e.nat_ = n;
  return e;
}

Element Element::infinity() {
  Element e;
  e.tag_ = Tag::kInfinity;
  return e;
}

Element Element::rat(Rational q) {
  if (q < 0 || q > 1) throw std::invalid_argument("interval: value outside [0, 1]");
  Element e;
  e.tag_ = Tag::kRat;
  e.q_ = std::move(q);
  return e;
}

Kind Element::kind() const {
  switch (tag_) {
    case Tag::kEmptyOpen:
    case Tag::kCofinOpen: return Kind::kCofinite;
    case Tag::kZero:
    case Tag::kNat:
    case Tag::kInfinity: return Kind::kOmegaChain;
    case Tag::kRat: return Kind::kInterval;
  }
  return Kind::kCofinite;
}

std::string Element::to_string() const {
  std::ostringstream out;
  switch (tag_) {
    case Tag::kEmptyOpen: out << "EmptyOpen"; break;
    case Tag::kCofinOpen: {
      out << "CofinOpen({";
      for (std::size_t i = 0; i < complement_.size(); ++i) out << (i ? "," : "") << complement_[i];
      out << "})";
      break;
    }
    case Tag::kZero: out << "Zero"; break;
    case Tag::kNat: out << "Nat(" << nat_ << ")"; break;
    case Tag::kInfinity: out << "Infinity"; break;
    case Tag::kRat: out << "Rat(" << q_ << ")"; break;
  }
  return out.str();
}

Element bottom(Kind kind) {
  switch (kind) {
    case Kind::kCofinite: return Element::empty_open();
    case Kind::kOmegaChain: return Element::zero();
    case Kind::kInterval: return Element::rat(0);
  }
  return Element::empty_open();
}

Element top(Kind kind) {
  switch (kind) {
    case Kind::kCofinite: return Element::cofin_open({});
    case Kind::kOmegaChain: return Element::infinity();
    case Kind::kInterval: return Element::rat(1);
  }
  return Element::empty_open();
}

bool leq(const Element& a, const Element& b) {
  same_frame(a, b);
  if (a.kind() != Kind::kCofinite) return compare_linear(a, b) <= 0;
  if (a.tag() == Tag::kEmptyOpen) return true;
  if (b.tag() == Tag::kEmptyOpen) return false;
  // ℕ \ F ⊆ ℕ \ G iff G ⊆ F.
  return std::includes(a.complement().begin(), a.complement().end(), b.complement().begin(), b.complement().end());
}

Element meet(const Element& a, const Element& b) {
  same_frame(a, b);
  if (a.kind() != Kind::kCofinite) return compare_linear(a, b) <= 0 ? a : b;
  if (a.tag() == Tag::kEmptyOpen || b.tag() == Tag::kEmptyOpen) return Element::empty_open();
  return Element::cofin_open(set_union(a.complement(), b.complement()));
}

Element join(const Element& a, const Element& b) {
  same_frame(a, b);
  if (a.kind() != Kind::kCofinite) return compare_linear(a, b) <= 0 ? b : a;
  if (a.tag() == Tag::kEmptyOpen) return b;
  if (b.tag() == Tag::kEmptyOpen) return a;
  return Element::cofin_open(set_intersection(a.complement(), b.complement()));
}

Element implies(const Element& a, const Element& b) {
  same_frame(a, b);
  if (leq(a, b)) return top(a.kind());
  if (a.kind() != Kind::kCofinite) return b;
  // a is a nonempty cofinite set here.
  if (b.tag() == Tag::kEmptyOpen) return Element::empty_open();
  return Element::cofin_open(set_difference(b.complement(), a.complement()));
}

Element pseudo(const Element& a) { return implies(a, bottom(a.kind())); }

Element double_neg(const Element& a) { return pseudo(pseudo(a)); }

PresentedFamily PresentedFamily::finite(std::vector<Element> members) {
  if (members.empty()) throw std::invalid_argument("presented family: empty");
  PresentedFamily f;
  f.kind_ = members.front().kind();
  f.schema_ = Schema::kFinite;
  f.members_ = std::move(members);
  f.meet_ = f.members_.front();
  f.join_ = f.members_.front();
  for (const Element& e : f.members_) {
    f.meet_ = meet(f.meet_, e);
    f.join_ = join(f.join_, e);
  }
  return f;
}

PresentedFamily PresentedFamily::constant(Element value) {
  PresentedFamily f;
  f.kind_ = value.kind();
  f.schema_ = Schema::kConstant;
  f.members_ = {value};
  f.meet_ = value;
  f.join_ = value;
  return f;
}

PresentedFamily PresentedFamily::initial_segments() {
  PresentedFamily f;
  f.kind_ = Kind::kCofinite;
  f.schema_ = Schema::kInitialSegments;
  f.meet_ = Element::empty_open();
  f.join_ = Element::cofin_open({0});
  return f;
}

PresentedFamily PresentedFamily::decreasing_to(Rational limit, Rational start) {
  if (!(0 <= limit && limit < start && start <= 1)) throw std::invalid_argument("decreasing_to: need 0 <= limit < start <= 1");
  PresentedFamily f;
  f.kind_ = Kind::kInterval;
  f.schema_ = Schema::kDecreasingTo;
  f.limit_ = limit;
  f.start_ = start;
  f.meet_ = Element::rat(limit);
  f.join_ = Element::rat(start);
  return f;
}

PresentedFamily PresentedFamily::increasing_to(Rational limit, Rational start) {
  if (!(0 < start && start < limit && limit <= 1)) throw std::invalid_argument("increasing_to: need 0 < start < limit <= 1");
  PresentedFamily f;
  f.kind_ = Kind::kInterval;
  f.schema_ = Schema::kIncreasingTo;
  f.limit_ = limit;
  f.start_ = start;
  f.meet_ = Element::rat(start);
  f.join_ = Element::rat(limit);
  return f;
}

PresentedFamily PresentedFamily::nat_ascending(long start) {
  PresentedFamily f;
  f.kind_ = Kind::kOmegaChain;
  f.schema_ = Schema::kNatAscending;
  f.nat_start_ = start;
  f.meet_ = Element::nat(start);
  f.join_ = Element::infinity();
  return f;
}

PresentedFamily PresentedFamily::with_claims(Element meet_claim, Element join_claim) const {
  same_frame(meet_claim, join_claim);
  if (meet_claim.kind() != kind_) throw MixedFrames("claims belong to a different frame");
  PresentedFamily f = *this;
  f.meet_ = std::move(meet_claim);
  f.join_ = std::move(join_claim);
  return f;
}

Element PresentedFamily::member(std::size_t i) const {
  switch (schema_) {
    case Schema::kFinite: return members_.at(i);
    case Schema::kConstant: return members_.front();
    case Schema::kInitialSegments: return Element::cofin_open(segment(static_cast<long>(i)));
    case Schema::kDecreasingTo: return Element::rat(limit_ + (start_ - limit_) / power_of_two(i));
    case Schema::kIncreasingTo: return Element::rat(limit_ - (limit_ - start_) / power_of_two(i));
    case Schema::kNatAscending: return Element::nat(nat_start_ + static_cast<long>(i));
  }
  return members_.at(i);
}

bool PresentedFamily::avoids_bottom() const {
  const Element zero = bottom(kind_);
  if (schema_ == Schema::kFinite || schema_ == Schema::kConstant)
    return std::none_of(members_.begin(), members_.end(), [&](const Element& e) { return e == zero; });
  return true;
}

std::vector<std::size_t> PresentedFamily::decisive_indices() const {
  // Search bound for the dyadic schemas; a claim closer to the limit than
  // 2^-4096 is beyond anything the catalog produces.
  constexpr std::size_t kMaxHalvings = 4096;
  auto first_index = [&](auto&& beyond) -> std::vector<std::size_t> {
    Rational gap = start_ > limit_ ? start_ - limit_ : limit_ - start_;
    for (std::size_t i = 0; i < kMaxHalvings; ++i, gap /= 2)
      if (beyond(gap)) return {i};
    return {};
  };
  switch (schema_) {
    case Schema::kFinite:
    case Schema::kConstant: return {};
    case Schema::kInitialSegments: {
      // member(i) = N \ {0..i} lies below a claimed meet N \ S unless i ∉ S.
      if (meet_.tag() != Element::Tag::kCofinOpen) return {};
      const std::vector<long>& removed = meet_.complement();
      long i = 0;
      while (std::binary_search(removed.begin(), removed.end(), i)) ++i;
      return {static_cast<std::size_t>(i)};
    }
    case Schema::kDecreasingTo:
      if (meet_.tag() != Element::Tag::kRat || meet_.value() <= limit_) return {};
      return first_index([&](const Rational& gap) { return gap < meet_.value() - limit_; });
    case Schema::kIncreasingTo:
      if (join_.tag() != Element::Tag::kRat || join_.value() >= limit_) return {};
      return first_index([&](const Rational& gap) { return gap < limit_ - join_.value(); });
    case Schema::kNatAscending:
      if (join_.tag() != Element::Tag::kNat) return {};
      return {static_cast<std::size_t>(std::max(0L, join_.nat_value() - nat_start_ + 1))};
  }
  return {};
}

std::optional<Element> PresentedFamily::limit() const {
  if (schema_ == Schema::kDecreasingTo || schema_ == Schema::kIncreasingTo) return Element::rat(limit_);
  return std::nullopt;
}

std::string PresentedFamily::describe() const {
  std::ostringstream out;
  switch (schema_) {
    case Schema::kFinite: {
      out << "finite {";
      for (std::size_t i = 0; i < members_.size(); ++i) out << (i ? ", " : "") << members_[i].to_string();
      out << "}";
      break;
    }
    case Schema::kConstant: out << "constant a_i = " << members_.front().to_string(); break;
    case Schema::kInitialSegments: out << "a_i = CofinOpen({0..i})"; break;
    case Schema::kDecreasingTo: out << "a_i = " << limit_ << " + (" << start_ << " - " << limit_ << ")/2^i"; break;
    case Schema::kIncreasingTo: out << "a_i = " << limit_ << " - (" << limit_ << " - " << start_ << ")/2^i"; break;
    case Schema::kNatAscending: out << "a_i = Nat(" << nat_start_ << " + i)"; break;
  }
  return out.str();
}

void validate_claims(const PresentedFamily& f, std::size_t depth) {
  auto fail = [&](const std::string& what) {
    throw InconsistentClaim(f.describe() + ": " + what + " (claimed meet " + f.claimed_meet().to_string() +
                            ", join " + f.claimed_join().to_string() + ")");
  };
  if (!f.infinite()) {
    if (!(meet_prefix(f, f.size()) == f.claimed_meet())) fail("meet differs from the claim");
    if (!(join_prefix(f, f.size()) == f.claimed_join())) fail("join differs from the claim");
    return;
  }
  if (depth < 2) throw std::invalid_argument("validate_claims: depth must be at least 2");
  std::vector<Element> meets;
  std::vector<Element> joins;
  for (std::size_t k = 1; k <= depth; ++k) {
    meets.push_back(k == 1 ? f.member(0) : meet(meets.back(), f.member(k - 1)));
    joins.push_back(k == 1 ? f.member(0) : join(joins.back(), f.member(k - 1)));
    if (!leq(f.claimed_meet(), meets.back())) fail("prefix meet " + std::to_string(k) + " lies below the claimed meet");
    if (!leq(joins.back(), f.claimed_join())) fail("prefix join " + std::to_string(k) + " lies above the claimed join");
    if (k > 1 && !leq(meets[k - 1], meets[k - 2])) fail("prefix meets do not decrease");
    if (k > 1 && !leq(joins[k - 2], joins[k - 1])) fail("prefix joins do not increase");
  }
  // Refutation probes: any candidate strictly above the claimed meet must fail
  // to lie below some prefix meet, and dually for the join.
  for (std::size_t i : f.decisive_indices()) {
    const Element x = f.member(i);
    if (!leq(f.claimed_meet(), x)) fail("member " + std::to_string(i) + " lies below the claimed meet");
    if (!leq(x, f.claimed_join())) fail("member " + std::to_string(i) + " lies above the claimed join");
  }
  std::vector<Element> probes{bottom(f.kind()), top(f.kind())};
  for (std::size_t j = 0; j < depth / 2; ++j) probes.push_back(f.member(j));
  if (auto l = f.limit()) probes.push_back(*l);
  for (const Element& x : probes) {
    if (lt(f.claimed_meet(), x) && std::all_of(meets.begin(), meets.end(), [&](const Element& m) { return leq(x, m); }))
      fail("the claimed meet is not the greatest lower bound: " + x.to_string() + " is below every prefix");
    if (lt(x, f.claimed_join()) && std::all_of(joins.begin(), joins.end(), [&](const Element& j) { return leq(j, x); }))
      fail("the claimed join is not the least upper bound: " + x.to_string() + " is above every prefix");
  }
}

Element family_meet(const PresentedFamily& f, std::size_t depth) {
  validate_claims(f, depth);
  return f.claimed_meet();
}

Element family_join(const PresentedFamily& f, std::size_t depth) {
  validate_claims(f, depth);
  return f.claimed_join();
}

PresentedFamily map_family(const PresentedFamily& f, Pointwise op) {
  auto apply = [&](const Element& e) { return op == Pointwise::kPseudo ? pseudo(e) : double_neg(e); };
  if (f.schema() == PresentedFamily::Schema::kFinite) {
    std::vector<Element> mapped;
    for (std::size_t i = 0; i < f.size(); ++i) mapped.push_back(apply(f.member(i)));
    return PresentedFamily::finite(std::move(mapped));
  }
  if (f.schema() == PresentedFamily::Schema::kConstant) return PresentedFamily::constant(apply(f.member(0)));
  if (!f.avoids_bottom()) throw std::logic_error("map_family: infinite schema meets bottom");
  // Nonzero elements have pseudocomplement 0 in all three frames.
  const Element value = apply(f.member(0));
  for (std::size_t i = 0; i < kDefaultPrefixDepth; ++i)
    if (!(apply(f.member(i)) == value)) throw std::logic_error("map_family: mapped schema is not constant");
  return PresentedFamily::constant(value);
}

const SymbolicVerdict* SymbolicReport::find(Property p) const {
  for (const auto& v : verdicts)
    if (v.property == p) return &v;
  return nullptr;
}

bool SymbolicReport::holds(Property p) const {
  const SymbolicVerdict* v = find(p);
  if (!v) throw std::out_of_range("property not classified: " + std::string(property_name(p)));
  return v->holds;
}

std::vector<Element> regular_elements(Kind kind) {
  std::vector<Element> out;
  for (const Element& x : representatives(kind)) {
    Element p = pseudo(x);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) { return lt(a, b); });
  for (const Element& r : out) ensure(double_neg(r) == r, "symbolic: pseudocomplement is not regular");
  return out;
}

SymbolicReport classify_symbolic(Kind kind, std::size_t depth) {
  SymbolicReport report{kind, {}, {}};
  const std::vector<Element> regular = regular_elements(kind);
  const Element zero = bottom(kind);
  const Element one = top(kind);
  const Element mid = middle(kind);
  auto add = [&](Property p, bool holds, Certificate c) { report.verdicts.push_back({p, holds, std::move(c)}); };

  const bool irreducible = regular.size() == 2 && regular[0] == zero && regular[1] == one;
  add(Property::kIrreducible, irreducible, {"B_L = {0, 1}", "pseudocomplement rules: a* = 0 for every a != 0", "", 0});

  // De Morgan on every nonempty A ⊆ B_L (a finite set).
  bool restricted = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << regular.size()); ++mask) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < regular.size(); ++i)
      if ((mask >> i) & 1U) members.push_back(regular[i]);
    restricted = restricted && second_de_morgan(PresentedFamily::finite(members), depth);
  }
  add(Property::kIed, restricted,
      {restricted ? "IED" : "not IED", "(/\\A)* <= \\/A* for all families A in B_L (finite B_L)", "", 0});
  add(Property::kEd, restricted, {restricted ? "ED" : "not ED", "implied by IED", "", 0});

  // 0 is completely prime iff some element lies below every nonzero element
  // and is itself nonzero; in the ω-chain that element is Nat(1).
  const std::vector<Element> reps = representatives(kind);
  const bool bottom_completely_prime =
      kind == Kind::kOmegaChain &&
      std::all_of(reps.begin(), reps.end(), [&](const Element& x) { return x == zero || leq(Element::nat(1), x); });

  if (auto family = vanishing_family(kind)) {
    const bool idm = second_de_morgan(*family, depth);
    const bool bot = double_negation_meets(*family, depth);
    add(Property::kIdm, idm,
        {"not IDM", "(/\\a_i)* <= \\/a_i* fails: meet is 0, every a_i* is 0", family->describe(), depth});
    add(Property::kBotScattered, bot,
        {"not bot-scattered", "/\\a_i** <= (/\\a_i)** fails: every a_i** is 1, the meet is 0", family->describe(),
         depth});
  } else {
    bool idm = bottom_completely_prime;
    bool bot = bottom_completely_prime;
    for (const PresentedFamily& f : sample_families(kind)) {
      idm = idm && second_de_morgan(f, depth);
      bot = bot && double_negation_meets(f, depth);
    }
    add(Property::kIdm, idm,
        {"IDM", "0 is completely prime: Nat(1) lies below every nonzero element, so (/\\A)* != 0 forces 0 in A",
         PresentedFamily::nat_ascending(1).describe(), depth});
    add(Property::kBotScattered, bot, {"bot-scattered", "implied by IDM", "", depth});
  }

  const bool boolean = join(mid, pseudo(mid)) == one;
  add(Property::kBoolean, boolean, {"not Boolean", "a v a* != 1 at a = " + mid.to_string(), "", 0});

  bool subfit = true;
  std::string subfit_note;
  if (kind == Kind::kCofinite) {
    // For a = ℕ \ F != 0 take c = ℕ \ {p} with p the least point of a.
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      std::vector<long> f;
      for (long i = 0; i < 5; ++i)
        if ((mask >> i) & 1U) f.push_back(i);
      const Element a = Element::cofin_open(f);
      long p = 0;
      while (std::binary_search(f.begin(), f.end(), p)) ++p;
      const Element c = Element::cofin_open({p});
      subfit = subfit && !(c == one) && join(c, a) == one;
    }
    subfit_note = "for a = N \\ F pick c = N \\ {p} with p in a";
  } else {
    // In a chain c v a = max(c, a) equals 1 only when c = 1.
    subfit = false;
    for (const Element& c : representatives(kind))
      if (!(c == one) && join(c, mid) == one) subfit = true;
    subfit_note = "c v " + mid.to_string() + " = 1 only for c = 1";
  }
  add(Property::kWeaklySubfit, subfit, {subfit ? "weakly subfit" : "not weakly subfit", subfit_note, "", 0});

  Element regular_below = zero;
  for (const Element& r : regular)
    if (leq(r, mid)) regular_below = join(regular_below, r);
  const bool semiregular = regular_below == mid;
  add(Property::kSemiregular, semiregular,
      {"not semiregular", mid.to_string() + " is not a join of elements of B_L = {0, 1}", "", 0});

  const bool linear = kind != Kind::kCofinite ||
                      leq(Element::cofin_open({0}), Element::cofin_open({1})) ||
                      leq(Element::cofin_open({1}), Element::cofin_open({0}));
  add(Property::kLinear, linear,
      {linear ? "linear" : "not linear", linear ? "order by rank" : "CofinOpen({0}), CofinOpen({1}) incomparable", "", 0});

  auto h = [&](Property p) { return report.holds(p); };
  auto implies = [](bool a, bool b) { return !a || b; };
  report.facts = {
      {"complete Boolean iff weakly subfit and IDM", h(Property::kBoolean) == (h(Property::kWeaklySubfit) && h(Property::kIdm))},
      {"IDM iff bot-scattered and IED", h(Property::kIdm) == (h(Property::kBotScattered) && h(Property::kIed))},
      {"complete Boolean iff semiregular and IED", h(Property::kBoolean) == (h(Property::kSemiregular) && h(Property::kIed))},
      {"Boolean => IDM => IED => ED", implies(h(Property::kBoolean), h(Property::kIdm)) &&
                                          implies(h(Property::kIdm), h(Property::kIed)) &&
                                          implies(h(Property::kIed), h(Property::kEd))},
      {"irreducible => IED", implies(h(Property::kIrreducible), h(Property::kIed))},
  };
  return report;
}

std::vector<Separation> strict_hierarchy_witnesses(std::size_t depth) {
  std::vector<Separation> out;
  auto certified = [&](Property holds, Property fails, Kind kind) {
    const SymbolicReport r = classify_symbolic(kind, depth);
    ensure(r.holds(holds) && !r.holds(fails), "separation certificate does not separate");
    Separation s{holds, fails, kind, r.find(fails)->certificate, ""};
    s.note = std::string(kind_name(kind)) + " satisfies " + std::string(property_name(holds)) + " (" +
             r.find(holds)->certificate.characterization + ")";
    out.push_back(std::move(s));
  };
  certified(Property::kIdm, Property::kBoolean, Kind::kOmegaChain);
  certified(Property::kIed, Property::kIdm, Kind::kCofinite);
  certified(Property::kIed, Property::kBotScattered, Kind::kCofinite);
  out.push_back({Property::kEd, Property::kIed, std::nullopt, std::nullopt,
                 "needs an infinite frame outside the symbolic catalog; "
                 "out of scope"});
  return out;
}

std::optional<Separation> separation(Property holds, Property fails, std::size_t depth) {
  for (Separation& s : strict_hierarchy_witnesses(depth))
    if (s.holds == holds && s.fails == fails) return std::move(s);
  return std::nullopt;
}

FiniteFrame cofinite_truncation(int m) {
  if (m < 0 || m > 5) throw std::invalid_argument("cofinite_truncation: m must be in [0, 5]");
  // Every subset of a finite set is cofinite, so every subset is open.
  std::vector<std::uint64_t> opens;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << (m + 1)); ++u) opens.push_back(u);
  return open_set_frame(FiniteSpace::validated(m + 1, std::move(opens)));
}

std::vector<Rational> extend_dense_chain_sublocale(std::vector<Rational> members) {
  auto check = [](const std::vector<Rational>& s) {
    ensure(!s.empty() && s.front() == 0 && s.back() == 1, "chain sublocale must contain 0 and 1");
    for (const Rational& x : s) {
      for (const Rational& y : s) ensure(std::binary_search(s.begin(), s.end(), std::min(x, y)), "not meet closed");
    }
    // a → s is 1 for a <= s and s otherwise, so it stays inside any set holding 1.
    for (const Rational& x : s)
      for (const Rational& a : {Rational(0), Rational(1, 3), x, Rational(1)}) {
        Element arrow = implies(Element::rat(a), Element::rat(x));
        ensure(std::binary_search(s.begin(), s.end(), arrow.value()), "not closed under a -> s");
      }
  };
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  check(members);
  std::size_t widest = 0;
  for (std::size_t i = 1; i + 1 < members.size(); ++i)
    if (members[i + 1] - members[i] > members[widest + 1] - members[widest]) widest = i;
  std::vector<Rational> larger = members;
  larger.push_back((members[widest] + members[widest + 1]) / 2);
  std::sort(larger.begin(), larger.end());
  check(larger);
  ensure(larger.size() > members.size(), "extension is not strictly larger");
  return larger;
}

}  // namespace localelab::symbolic
