#include "localelab/sublocale.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace localelab {

namespace {

ElementSet meet_closure(const FiniteFrame& f, ElementSet s) {
  s.insert(f.top());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a : s)
      for (Element b : s) {
        Element m = f.meet(a, b);
        if (!s.contains(m)) {
          s.insert(m);
          grew = true;
        }
      }
  }
  return s;
}

}  // namespace

SublocaleCheck check_sublocale(const FiniteFrame& f, ElementSet subset) {
  SublocaleCheck check;
  if (!subset.contains(f.top())) {
    check.failure = SublocaleCheck::Failure::kMissingTop;
    check.witness = {f.top()};
    return check;
  }
  // In a finite lattice closure under binary meets plus top gives all meets.
  for (Element s : subset)
    for (Element t : subset)
      if (!subset.contains(f.meet(s, t))) {
        check.failure = SublocaleCheck::Failure::kNotMeetClosed;
        check.witness = {s, t};
        return check;
      }
  for (Element a = 0; a < f.size(); ++a)
    for (Element s : subset)
      if (!subset.contains(f.implies(a, s))) {
        check.failure = SublocaleCheck::Failure::kNotHeytingClosed;
        check.witness = {a, s};
        return check;
      }
  return check;
}

Sublocale generated_sublocale(const FiniteFrame& f, ElementSet generators) {
  ElementSet arrows;
  for (Element x : generators)
    for (Element a = 0; a < f.size(); ++a) arrows.insert(f.implies(a, x));
  return Sublocale{meet_closure(f, arrows)};
}

std::vector<Element> nucleus_of(const FiniteFrame& f, const Sublocale& s) {
  std::vector<Element> nu(static_cast<std::size_t>(f.size()));
  for (Element a = 0; a < f.size(); ++a) nu[static_cast<std::size_t>(a)] = f.meet_all(s.members & f.up_set(a));
  return nu;
}

Sublocale open_sublocale(const FiniteFrame& f, Element a) {
  ElementSet images;
  ElementSet fixed;
  for (Element b = 0; b < f.size(); ++b) {
    images.insert(f.implies(a, b));
    if (f.implies(a, b) == b) fixed.insert(b);
  }
  ensure(images == fixed, "o(a): {a -> b} and {b : a -> b = b} differ");
  return Sublocale{images};
}

Sublocale closed_sublocale(const FiniteFrame& f, Element a) { return Sublocale{f.up_set(a)}; }

Sublocale whole(const FiniteFrame& f) { return Sublocale{f.elements()}; }

Sublocale closure(const FiniteFrame& f, const Sublocale& s) { return closed_sublocale(f, f.meet_all(s.members)); }

bool is_dense(const FiniteFrame& f, const Sublocale& s) { return s.contains(f.bottom()); }

Sublocale interior(const FiniteFrame& f, const Sublocale& s) {
  ElementSet inside;
  for (Element a = 0; a < f.size(); ++a)
    if (open_sublocale(f, a).members.subset_of(s.members)) inside.insert(a);
  Sublocale result = open_sublocale(f, f.join_all(inside));
  ensure(result.members.subset_of(s.members), "interior: o(\\/{a : o(a) in S}) is not inside S");
  return result;
}

Sublocale booleanization(const FiniteFrame& f) {
  ElementSet pseudocomplements;
  ElementSet regular;
  for (Element a = 0; a < f.size(); ++a) {
    pseudocomplements.insert(f.pseudo(a));
    if (f.double_neg(a) == a) regular.insert(a);
  }
  ensure(pseudocomplements == regular, "B_L: {a*} != {a : a** = a}");
  Sublocale b{regular};
  ensure(is_sublocale(f, b.members), "B_L is not a sublocale");
  ensure(is_dense(f, b), "B_L is not dense");
  // Complemented inside B_L, whose joins are (-)** of ambient joins.
  for (Element a : regular)
    ensure(f.double_neg(f.join(a, f.pseudo(a))) == f.top(), "B_L member not complemented in B_L");
  return b;
}

ElementSet SubFrame::lift(ElementSet local) const {
  ElementSet out;
  for (Element e : local) out.insert(lift(e));
  return out;
}

SubFrame induced_frame(const FiniteFrame& f, ElementSet subset) {
  SubFrame sub;
  sub.to_parent = subset.to_vector();
  sub.from_parent.assign(static_cast<std::size_t>(f.size()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    sub.from_parent[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Element>(i);
  const std::size_t k = sub.to_parent.size();
  OrderMatrix leq(k, std::vector<bool>(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(f.label(sub.to_parent[i]));
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = f.leq(sub.to_parent[i], sub.to_parent[j]);
  }
  sub.frame = validate_frame(leq, std::move(labels));
  return sub;
}

SubFrame sub_frame_structure(const FiniteFrame& f, const Sublocale& s) {
  SubFrame sub = induced_frame(f, s.members);
  const std::vector<Element> nu = nucleus_of(f, s);
  const FiniteFrame& local = sub.frame;
  for (Element x = 0; x < local.size(); ++x)
    for (Element y = 0; y < local.size(); ++y) {
      Element px = sub.lift(x);
      Element py = sub.lift(y);
      ensure(sub.lift(local.meet(x, y)) == f.meet(px, py), "sublocale meet differs from ambient meet");
      ensure(sub.lift(local.join(x, y)) == nu[static_cast<std::size_t>(f.join(px, py))],
             "sublocale join differs from nu(ambient join)");
      ensure(sub.lift(local.implies(x, y)) == f.implies(px, py), "sublocale arrow differs from ambient arrow");
    }
  return sub;
}

SubFrame down_frame(const FiniteFrame& f, Element a) { return induced_frame(f, f.down_set(a)); }

bool closed_pseudocomplement_formula_holds(const FiniteFrame& f, Element b) {
  SubFrame sub = sub_frame_structure(f, closed_sublocale(f, b));
  for (Element x = 0; x < sub.frame.size(); ++x)
    if (sub.lift(sub.frame.pseudo(x)) != f.implies(sub.lift(x), b)) return false;
  return true;
}

bool open_pseudocomplement_formula_holds(const FiniteFrame& f, Element a) {
  SubFrame down = down_frame(f, a);
  for (Element x = 0; x < down.frame.size(); ++x) {
    Element px = down.lift(x);
    if (down.lift(down.frame.pseudo(x)) != f.meet(f.pseudo(px), a)) return false;
    if (down.lift(down.frame.double_neg(x)) != f.meet(f.double_neg(px), a)) return false;
  }
  // x ↦ a → x is an order isomorphism ↓a → o(a) with inverse s ↦ s ∧ a.
  const Sublocale open = open_sublocale(f, a);
  if (open.members.size() != down.frame.size()) return false;
  for (Element x : f.down_set(a))
    if (f.meet(f.implies(a, x), a) != x) return false;
  for (Element s : open.members)
    if (f.implies(a, f.meet(s, a)) != s) return false;
  return true;
}

SublocaleLattice::SublocaleLattice(const FiniteFrame& f, std::vector<Sublocale> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const Sublocale& x, const Sublocale& y) { return x.members.bits() < y.members.bits(); });
  const std::size_t m = members_.size();
  meet_.assign(m * m, 0);
  join_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Sublocale inter{members_[i].members & members_[j].members};
      auto mi = index_of(inter);
      if (!mi) {
        meets_are_intersections_ = false;
        mi = index_of(generated_sublocale(f, inter.members));
      }
      auto ji = index_of(generated_sublocale(f, members_[i].members | members_[j].members));
      ensure(mi.has_value() && ji.has_value(), "sublocale lattice is not closed under meet/join");
      meet_[i * m + j] = *mi;
      join_[i * m + j] = *ji;
    }
}

std::optional<std::size_t> SublocaleLattice::index_of(const Sublocale& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s,
                             [](const Sublocale& x, const Sublocale& y) { return x.members.bits() < y.members.bits(); });
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool SublocaleLattice::is_coframe() const {
  if (!meets_are_intersections_) return false;
  const std::size_t m = size();
  if (m == 0) return false;
  // Bottom and top of the inclusion order.
  for (std::size_t i = 0; i < m; ++i)
    if (!leq(bottom(), i) || !leq(i, top())) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!leq(a, join(a, b)) || !leq(b, join(a, b))) return false;
      for (std::size_t c = 0; c < m; ++c) {
        if (leq(a, c) && leq(b, c) && !leq(join(a, b), c)) return false;
        if (join(a, meet(b, c)) != meet(join(a, b), join(a, c))) return false;
      }
    }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> SublocaleLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < m && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

SublocaleLattice enumerate_sublocales(const FiniteFrame& f, std::size_t budget) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Sublocale> found;
  std::deque<Sublocale> queue;
  auto visit = [&](Sublocale s) {
    if (!seen.insert(s.members.bits()).second) return;
    if (found.size() >= budget)
      throw BudgetExceeded("more than " + std::to_string(budget) + " sublocales");
    found.push_back(s);
    queue.push_back(s);
  };
  visit(generated_sublocale(f, ElementSet{}));
  while (!queue.empty()) {
    Sublocale s = queue.front();
    queue.pop_front();
    for (Element x : f.elements() - s.members) {
      ElementSet gen = s.members;
      gen.insert(x);
      visit(generated_sublocale(f, gen));
    }
  }
  return SublocaleLattice(f, std::move(found));
}

}  // namespace localelab
