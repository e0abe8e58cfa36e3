#include "localelab/frame.hpp"

#include <sstream>

#include "localelab/families.hpp"

namespace localelab {

namespace {

std::string join_indices(const std::vector<Element>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  return out.str();
}

[[noreturn]] void reject(FrameError::Kind kind, std::vector<Element> witness, const std::string& what) {
  std::string message = what;
  if (!witness.empty()) message += " (witness: " + join_indices(witness) + ")";
  throw FrameError(kind, std::move(witness), message);
}

// Greatest element of `candidates` under the order given by `down`, i.e. the
// candidate whose down-set contains all the others.
std::optional<Element> greatest(ElementSet candidates, const std::vector<ElementSet>& down) {
  for (Element c : candidates)
    if (candidates.subset_of(down[c])) return c;
  return std::nullopt;
}

}  // namespace

Element FiniteFrame::meet_all(ElementSet s) const {
  Element acc = top_;
  for (Element e : s) acc = meet(acc, e);
  return acc;
}

Element FiniteFrame::join_all(ElementSet s) const {
  Element acc = bottom_;
  for (Element e : s) acc = join(acc, e);
  return acc;
}

std::vector<std::pair<Element, Element>> FiniteFrame::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      ElementSet between = up_[a] & down_[b];
      if (between.size() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string FiniteFrame::label(Element a) const {
  if (static_cast<std::size_t>(a) < labels_.size()) return labels_[static_cast<std::size_t>(a)];
  return std::to_string(a);
}

OrderMatrix FiniteFrame::order() const {
  OrderMatrix m(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_)));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = leq(a, b);
  return m;
}

FiniteFrame validate_frame(const OrderMatrix& leq, std::vector<std::string> labels) {
  const int n = static_cast<int>(leq.size());
  if (n == 0) reject(FrameError::Kind::kEmpty, {}, "a frame needs at least one element");
  if (n > kMaxFrameSize)
    reject(FrameError::Kind::kTooLarge, {}, "frames are limited to " + std::to_string(kMaxFrameSize) + " elements");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) reject(FrameError::Kind::kMalformed, {}, "order matrix is not square");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    reject(FrameError::Kind::kMalformed, {}, "label count does not match element count");

  auto le = [&](Element a, Element b) { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (Element i = 0; i < n; ++i)
    if (!le(i, i)) reject(FrameError::Kind::kNotAPartialOrder, {i}, "order is not reflexive");
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (le(i, j) && le(j, i)) reject(FrameError::Kind::kNotAPartialOrder, {i, j}, "order is not antisymmetric");
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (le(i, j))
        for (Element k = 0; k < n; ++k)
          if (le(j, k) && !le(i, k))
            reject(FrameError::Kind::kNotAPartialOrder, {i, j, k}, "order is not transitive");

  FiniteFrame f;
  f.n_ = n;
  f.up_.assign(static_cast<std::size_t>(n), ElementSet{});
  f.down_.assign(static_cast<std::size_t>(n), ElementSet{});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le(a, b)) {
        f.up_[static_cast<std::size_t>(a)].insert(b);
        f.down_[static_cast<std::size_t>(b)].insert(a);
      }

  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  f.meet_.assign(nn, 0);
  f.join_.assign(nn, 0);
  // Upper bounds ordered by the reversed relation: the least upper bound is the
  // "greatest" element under `up`.
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto m = greatest(f.down_[static_cast<std::size_t>(a)] & f.down_[static_cast<std::size_t>(b)], f.down_);
      if (!m) reject(FrameError::Kind::kNotALattice, {a, b}, "pair has no meet");
      auto j = greatest(f.up_[static_cast<std::size_t>(a)] & f.up_[static_cast<std::size_t>(b)], f.up_);
      if (!j) reject(FrameError::Kind::kNotALattice, {a, b}, "pair has no join");
      f.meet_[f.index(a, b)] = f.meet_[f.index(b, a)] = *m;
      f.join_[f.index(a, b)] = f.join_[f.index(b, a)] = *j;
    }
  }

  // A finite nonempty lattice is complete: fold the binary operations.
  f.bottom_ = 0;
  f.top_ = 0;
  for (Element a = 1; a < n; ++a) {
    f.bottom_ = f.meet_[f.index(f.bottom_, a)];
    f.top_ = f.join_[f.index(f.top_, a)];
  }

  // For finite lattices binary distributivity is equivalent to the frame law
  // a ∧ ⋁B = ⋁(a ∧ b) (induction on |B|; B = ∅ is trivial).
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b + 1; c < n; ++c) {
        Element lhs = f.meet(a, f.join(b, c));
        Element rhs = f.join(f.meet(a, b), f.meet(a, c));
        if (lhs != rhs) reject(FrameError::Kind::kNotDistributive, {a, b, c}, "a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)");
      }

  f.imp_.assign(nn, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      ElementSet below;
      for (Element c = 0; c < n; ++c)
        if (f.leq(f.meet(a, c), b)) below.insert(c);
      f.imp_[f.index(a, b)] = f.join_all(below);
    }

  f.labels_ = std::move(labels);
  return f;
}

FiniteFrame frame_from_sets(const std::vector<std::uint64_t>& sets, std::vector<std::string> labels) {
  OrderMatrix leq(sets.size(), std::vector<bool>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = (sets[i] & ~sets[j]) == 0;
  return validate_frame(leq, std::move(labels));
}

HeytingLawReport heyting_laws_check(const FiniteFrame& f) {
  HeytingLawReport report;
  auto fail = [&](std::string law, std::vector<Element> witness, ElementSet family = {}) {
    report.passed = false;
    report.failed_law = std::move(law);
    report.witness = std::move(witness);
    report.family = family;
    return report;
  };

  const int n = f.size();
  const ElementSet all = f.elements();
  FamilyQuantifier quantifier;

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if ((f.implies(a, b) == f.top()) != f.leq(a, b)) return fail("a -> b = 1 iff a <= b", {a, b});
      if (f.implies(a, b) != f.implies(a, f.meet(a, b))) return fail("a -> b = a -> (a ^ b)", {a, b});
      if (f.implies(a, b) != f.implies(f.join(a, b), b)) return fail("a -> b = (a v b) -> b", {a, b});
      for (Element c = 0; c < n; ++c)
        if (f.leq(f.meet(a, c), b) != f.leq(c, f.implies(a, b))) return fail("a ^ c <= b iff c <= a -> b", {a, b, c});
      if (f.double_neg(f.meet(a, b)) != f.meet(f.double_neg(a), f.double_neg(b)))
        return fail("(a ^ b)** = a** ^ b**", {a, b});
      if (f.double_neg(f.implies(a, b)) != f.implies(f.double_neg(a), f.double_neg(b)))
        return fail("(a -> b)** = a** -> b**", {a, b});
      if (f.leq(a, b) && !f.leq(f.pseudo(b), f.pseudo(a))) return fail("a <= b implies b* <= a*", {a, b});
    }
    if (!f.leq(a, f.double_neg(a))) return fail("a <= a**", {a});
    if (f.pseudo(f.double_neg(a)) != f.pseudo(a)) return fail("a*** = a*", {a});
    if (f.double_neg(f.double_neg(a)) != f.double_neg(a)) return fail("(-)** idempotent", {a});
  }
  if (f.pseudo(f.bottom()) != f.top()) return fail("0* = 1", {f.bottom()});

  // a -> ⋀B = ⋀(a -> b)
  for (Element a = 0; a < n; ++a) {
    std::array<Aggregate, 2> aggs{meet_of(f), meet_of(f, [&](Element b) { return f.implies(a, b); })};
    if (auto fam = quantifier.counterexample(all, aggs, [&](const auto& v) { return f.implies(a, v[0]) == v[1]; }))
      return fail("a -> /\\B = /\\(a -> b)", {a}, *fam);
  }
  // (⋁A) -> b = ⋀(a -> b)
  for (Element b = 0; b < n; ++b) {
    std::array<Aggregate, 2> aggs{join_of(f), meet_of(f, [&](Element a) { return f.implies(a, b); })};
    if (auto fam = quantifier.counterexample(all, aggs, [&](const auto& v) { return f.implies(v[0], b) == v[1]; }))
      return fail("(\\/A) -> b = /\\(a -> b)", {b}, *fam);
  }
  // First De Morgan law (⋁A)* = ⋀A*, and ⋀A** <= (⋀A)** on (finite) families.
  {
    std::array<Aggregate, 2> aggs{join_of(f), meet_of(f, [&](Element a) { return f.pseudo(a); })};
    if (auto fam = quantifier.counterexample(all, aggs, [&](const auto& v) { return f.pseudo(v[0]) == v[1]; }))
      return fail("first De Morgan law (\\/A)* = /\\A*", {}, *fam);
  }
  {
    std::array<Aggregate, 2> aggs{meet_of(f), meet_of(f, [&](Element a) { return f.double_neg(a); })};
    if (auto fam = quantifier.counterexample(all, aggs, [&](const auto& v) { return f.double_neg(v[0]) == v[1]; }))
      return fail("/\\A** = (/\\A)** for finite A", {}, *fam);
  }
  return report;
}

}  // namespace localelab
