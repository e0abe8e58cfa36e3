#include "localelab/maps.hpp"

#include <algorithm>
#include <unordered_map>

#include "localelab/props.hpp"

namespace localelab {

namespace {

FrameHom local_hom(const SubFrame& from, const SubFrame& to, const std::function<Element(Element)>& parent_map) {
  std::vector<Element> table;
  for (Element x = 0; x < from.frame.size(); ++x) {
    Element image = parent_map(from.lift(x));
    Element local = to.lower(image);
    ensure(local >= 0, "restricted map leaves the target subframe");
    table.push_back(local);
  }
  return FrameHom{share(from.frame), share(to.frame), std::move(table)};
}

bool is_hom(const FrameRef& source, const FrameRef& target, const std::vector<Element>& table) {
  try {
    validate_hom(source, target, table);
    return true;
  } catch (const HomError&) {
    return false;
  }
}

}  // namespace

FrameHom validate_hom(FrameRef source, FrameRef target, std::vector<Element> table) {
  const FiniteFrame& s = *source;
  const FiniteFrame& t = *target;
  if (static_cast<int>(table.size()) != s.size())
    throw HomError(HomError::Kind::kWrongSize, {}, "hom table size differs from source size");
  for (Element a = 0; a < s.size(); ++a)
    if (table[static_cast<std::size_t>(a)] < 0 || table[static_cast<std::size_t>(a)] >= t.size())
      throw HomError(HomError::Kind::kOutOfRange, ElementSet{a}, "hom table entry out of range");
  auto f = [&](Element a) { return table[static_cast<std::size_t>(a)]; };
  if (f(s.bottom()) != t.bottom()) throw HomError(HomError::Kind::kNotJoinPreserving, {}, "f(0) != 0");
  if (f(s.top()) != t.top()) throw HomError(HomError::Kind::kNotMeetPreserving, {}, "f(1) != 1");
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = a + 1; b < s.size(); ++b) {
      if (f(s.join(a, b)) != t.join(f(a), f(b)))
        throw HomError(HomError::Kind::kNotJoinPreserving, ElementSet{a, b}, "f(a v b) != f(a) v f(b)");
      if (f(s.meet(a, b)) != t.meet(f(a), f(b)))
        throw HomError(HomError::Kind::kNotMeetPreserving, ElementSet{a, b}, "f(a ^ b) != f(a) ^ f(b)");
    }
  return FrameHom{std::move(source), std::move(target), std::move(table)};
}

FrameHom identity_hom(FrameRef frame) {
  std::vector<Element> table;
  for (Element a = 0; a < frame->size(); ++a) table.push_back(a);
  return FrameHom{frame, frame, std::move(table)};
}

FrameHom compose(const FrameHom& f, const FrameHom& g) {
  ensure(*f.target == *g.source, "compose: frames do not match");
  std::vector<Element> table;
  for (Element a = 0; a < f.source->size(); ++a) table.push_back(g(f(a)));
  return FrameHom{f.source, g.target, std::move(table)};
}

LocalicMap right_adjoint(const FrameHom& f) {
  const FiniteFrame& s = *f.source;
  const FiniteFrame& t = *f.target;
  std::vector<Element> table;
  for (Element m = 0; m < t.size(); ++m) {
    ElementSet below;
    for (Element a = 0; a < s.size(); ++a)
      if (t.leq(f(a), m)) below.insert(a);
    table.push_back(s.join_all(below));
  }
  for (Element a = 0; a < s.size(); ++a)
    for (Element m = 0; m < t.size(); ++m)
      ensure(t.leq(f(a), m) == s.leq(a, table[static_cast<std::size_t>(m)]), "f -| f_* adjunction fails");
  return LocalicMap{f, std::move(table)};
}

std::vector<Element> left_adjoint(const FrameHom& f) {
  const FiniteFrame& s = *f.source;
  const FiniteFrame& t = *f.target;
  std::vector<Element> table;
  for (Element b = 0; b < t.size(); ++b) {
    ElementSet above;
    for (Element a = 0; a < s.size(); ++a)
      if (t.leq(b, f(a))) above.insert(a);
    table.push_back(s.meet_all(above));
  }
  for (Element b = 0; b < t.size(); ++b)
    for (Element a = 0; a < s.size(); ++a)
      ensure(s.leq(table[static_cast<std::size_t>(b)], a) == t.leq(b, f(a)), "f_! -| f adjunction fails");
  return table;
}

Openness classify_openness(const FrameHom& f) {
  const FiniteFrame& s = *f.source;
  const FiniteFrame& t = *f.target;
  Openness out;
  const std::vector<Element> left = left_adjoint(f);
  auto f_shriek = [&](Element b) { return left[static_cast<std::size_t>(b)]; };
  for (Element a = 0; a < s.size() && !out.frobenius_witness; ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (f_shriek(t.meet(b, f(a))) != s.meet(f_shriek(b), a)) {
        out.frobenius_witness = std::pair{a, b};
        break;
      }
  out.open = !out.frobenius_witness;

  bool preserves_arrows = true;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b)
      if (f(s.implies(a, b)) != t.implies(f(a), f(b))) preserves_arrows = false;
  ensure(out.open == preserves_arrows, "open (Frobenius) differs from preserving Heyting arrows");

  for (Element a = 0; a < s.size(); ++a) {
    if (!out.nearly_open_witness && f(s.pseudo(a)) != t.pseudo(f(a))) out.nearly_open_witness = a;
    if (!out.weakly_open_witness && !t.leq(f(s.double_neg(a)), t.double_neg(f(a)))) out.weakly_open_witness = a;
  }
  out.nearly_open = !out.nearly_open_witness;
  out.weakly_open = !out.weakly_open_witness;
  ensure(!out.open || out.nearly_open, "open but not nearly open");
  ensure(!out.nearly_open || out.weakly_open, "nearly open but not weakly open");
  return out;
}

Sublocale image(const LocalicMap& f, const Sublocale& s) {
  ElementSet out;
  for (Element m : s.members) out.insert(f(m));
  ensure(is_sublocale(*f.hom.source, out), "image of a sublocale is not a sublocale");
  return Sublocale{out};
}

Sublocale preimage(const LocalicMap& f, const Sublocale& t, std::size_t budget) {
  const FiniteFrame& m = *f.hom.target;
  const SublocaleLattice lattice = enumerate_sublocales(m, budget);
  ElementSet joined;
  for (const Sublocale& s : lattice.members())
    if (image(f, s).members.subset_of(t.members)) joined |= s.members;
  Sublocale result = generated_sublocale(m, joined);
  ensure(image(f, result).members.subset_of(t.members), "preimage: image of the join escapes T");
  for (const Sublocale& s : lattice.members())
    ensure(image(f, s).members.subset_of(t.members) == s.members.subset_of(result.members),
           "image -| preimage adjunction fails");
  return result;
}

BooleanRestriction booleanization_functor(const FrameHom& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  if (!satisfies_ied(l) || !satisfies_ied(m)) throw PreconditionError("booleanization_functor: frames must be IED");
  BooleanRestriction out{{}, sub_frame_structure(l, booleanization(l)), sub_frame_structure(m, booleanization(m))};
  out.hom = local_hom(out.source_boolean, out.target_boolean, [&](Element a) { return f(a); });
  try {
    out.hom = validate_hom(out.hom.source, out.hom.target, out.hom.table);
  } catch (const HomError& e) {
    throw SoundnessError(std::string("B(f) is not a frame homomorphism: ") + e.what());
  }
  for (Element b = 0; b < out.source_boolean.frame.size(); ++b)
    ensure(out.target_boolean.lift(out.hom(b)) == f(out.source_boolean.lift(b)), "i_M . B(f) != f . i_L");
  return out;
}

FrameHom coreflection_check(const FrameHom& h) {
  const FiniteFrame& b0 = *h.source;
  const FiniteFrame& l = *h.target;
  if (!is_boolean(b0).holds) throw PreconditionError("coreflection_check: source must be Boolean");
  if (!satisfies_ied(l)) throw PreconditionError("coreflection_check: target must be IED");
  const SubFrame regular = sub_frame_structure(l, booleanization(l));
  std::vector<Element> table;
  for (Element a = 0; a < b0.size(); ++a) {
    Element local = regular.lower(h(a));
    ensure(local >= 0, "h does not factor through B_L");
    table.push_back(local);
  }
  FrameRef b_l = share(regular.frame);
  FrameHom factor{h.source, b_l, table};
  ensure(is_hom(h.source, b_l, table), "factorization through B_L is not a frame homomorphism");

  if (b0.size() <= 8 && b_l->size() <= 8) {
    int matches = 0;
    for (const FrameHom& g : enumerate_homs(h.source, b_l)) {
      bool commutes = true;
      for (Element a = 0; a < b0.size(); ++a)
        if (regular.lift(g(a)) != h(a)) commutes = false;
      if (commutes) ++matches;
    }
    ensure(matches == 1, "factorization through B_L is not unique");
  }
  return factor;
}

bool weakly_open_square_check(const FrameHom& f) {
  const FiniteFrame& l = *f.source;
  const FiniteFrame& m = *f.target;
  const SubFrame bl = sub_frame_structure(l, booleanization(l));
  const SubFrame bm = sub_frame_structure(m, booleanization(m));
  for (Element a = 0; a < l.size(); ++a)
    if (m.double_neg(f(l.double_neg(a))) != m.double_neg(f(a))) return false;
  std::vector<Element> table;
  for (Element b = 0; b < bl.frame.size(); ++b) table.push_back(bm.lower(m.double_neg(f(bl.lift(b)))));
  return is_hom(share(bl.frame), share(bm.frame), table);
}

std::vector<FrameHom> enumerate_homs(FrameRef source, FrameRef target, std::size_t limit) {
  const FiniteFrame& s = *source;
  const FiniteFrame& t = *target;
  std::vector<Element> order = s.elements().to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return s.down_set(a).size() < s.down_set(b).size(); });
  std::vector<Element> table(static_cast<std::size_t>(s.size()), -1);
  std::vector<FrameHom> out;

  // Checks every assigned pair that involves `a` or whose meet or join is `a`.
  auto consistent = [&](Element a) {
    auto at = [&](Element x) { return table[static_cast<std::size_t>(x)]; };
    for (Element b = 0; b < s.size(); ++b) {
      if (at(b) < 0) continue;
      if (s.leq(a, b) && !t.leq(at(a), at(b))) return false;
      if (s.leq(b, a) && !t.leq(at(b), at(a))) return false;
      for (Element c = b; c < s.size(); ++c) {
        if (at(c) < 0) continue;
        const Element m = s.meet(b, c);
        const Element j = s.join(b, c);
        if (b != a && c != a && m != a && j != a) continue;
        if (at(m) >= 0 && at(m) != t.meet(at(b), at(c))) return false;
        if (at(j) >= 0 && at(j) != t.join(at(b), at(c))) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == order.size()) {
      if (out.size() >= limit) throw BudgetExceeded("more than " + std::to_string(limit) + " homomorphisms");
      out.push_back(validate_hom(source, target, table));
      return;
    }
    const Element a = order[i];
    for (Element v = 0; v < t.size(); ++v) {
      if (a == s.bottom() && v != t.bottom()) continue;
      if (a == s.top() && v != t.top()) continue;
      table[static_cast<std::size_t>(a)] = v;
      if (consistent(a)) assign(i + 1);
      table[static_cast<std::size_t>(a)] = -1;
    }
  };
  assign(0);
  return out;
}

FrameHom random_downset_hom(const Poset& p, FrameRef source, const Poset& q, FrameRef target, std::mt19937_64& rng) {
  const std::vector<std::uint64_t> p_down = downsets_of(p);
  const std::vector<std::uint64_t> q_down = downsets_of(q);
  ensure(static_cast<int>(p_down.size()) == source->size() && static_cast<int>(q_down.size()) == target->size(),
         "random_downset_hom: frames are not the downset frames of the posets");
  std::unordered_map<std::uint64_t, Element> q_index;
  for (std::size_t i = 0; i < q_down.size(); ++i) q_index[q_down[i]] = static_cast<Element>(i);

  if (p.m == 0) {
    // D(∅) is the one-element frame; it maps only into another one-element frame.
    ensure(q.m == 0, "random_downset_hom: no hom from the one-element frame");
    return validate_hom(source, target, {0});
  }
  std::uniform_int_distribution<int> pick(0, p.m - 1);
  std::vector<int> phi(static_cast<std::size_t>(q.m));
  for (;;) {
    for (int& x : phi) x = pick(rng);
    bool monotone = true;
    for (int y = 0; y < q.m && monotone; ++y)
      for (int z = 0; z < q.m; ++z)
        if (q.leq[y][z] && !p.leq[phi[static_cast<std::size_t>(y)]][phi[static_cast<std::size_t>(z)]]) {
          monotone = false;
          break;
        }
    if (monotone) break;
  }
  std::vector<Element> table;
  for (std::uint64_t u : p_down) {
    std::uint64_t pre = 0;
    for (int y = 0; y < q.m; ++y)
      if ((u >> phi[static_cast<std::size_t>(y)]) & 1U) pre |= std::uint64_t{1} << y;
    table.push_back(q_index.at(pre));
  }
  return validate_hom(std::move(source), std::move(target), std::move(table));
}

}  // namespace localelab
