#include "localelab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "localelab/canonical.hpp"

namespace localelab {

namespace {

std::string set_label(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1U) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

bool by_size_then_mask(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

FiniteFrame frame_of_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), by_size_then_mask);
  std::vector<std::string> labels;
  for (std::uint64_t m : masks) labels.push_back(set_label(m));
  return frame_from_sets(masks, std::move(labels));
}

// Extends a naturally labelled poset on {0..j-1} by one element whose strict
// down-set is `below`.
void extend(std::vector<std::uint64_t>& below, int m, std::vector<std::vector<std::uint64_t>>& out) {
  const int j = static_cast<int>(below.size());
  if (j == m) {
    out.push_back(below);
    return;
  }
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << j); ++d) {
    bool closed = true;
    for (int i = 0; i < j && closed; ++i)
      if (((d >> i) & 1U) && (below[static_cast<std::size_t>(i)] & ~d)) closed = false;
    if (!closed) continue;
    below.push_back(d);
    extend(below, m, out);
    below.pop_back();
  }
}

}  // namespace

Poset Poset::validated(OrderMatrix leq) {
  const int m = static_cast<int>(leq.size());
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("poset: order matrix is not square");
  for (int i = 0; i < m; ++i) {
    if (!leq[i][i]) throw std::invalid_argument("poset: not reflexive at " + std::to_string(i));
    for (int j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw std::invalid_argument("poset: not antisymmetric");
      for (int k = 0; k < m; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) throw std::invalid_argument("poset: not transitive");
    }
  }
  return Poset{m, std::move(leq)};
}

Poset Poset::chain(int m) {
  OrderMatrix leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) leq[i][j] = true;
  return Poset{m, std::move(leq)};
}

Poset Poset::antichain(int m) {
  OrderMatrix leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) leq[i][i] = true;
  return Poset{m, std::move(leq)};
}

FiniteSpace FiniteSpace::validated(int points, std::vector<std::uint64_t> opens) {
  if (points < 0 || points > 63) throw std::invalid_argument("space: point count out of range");
  const std::uint64_t whole = (std::uint64_t{1} << points) - 1;
  std::set<std::uint64_t> set(opens.begin(), opens.end());
  if (!set.contains(0) || !set.contains(whole)) throw std::invalid_argument("space: empty set and whole space must be open");
  for (std::uint64_t u : set) {
    if (u & ~whole) throw std::invalid_argument("space: open set mentions a missing point");
    for (std::uint64_t v : set)
      if (!set.contains(u | v) || !set.contains(u & v))
        throw std::invalid_argument("space: opens not closed under union and intersection");
  }
  return FiniteSpace{points, std::vector<std::uint64_t>(set.begin(), set.end())};
}

bool FiniteSpace::is_t0() const {
  for (int x = 0; x < points; ++x)
    for (int y = x + 1; y < points; ++y) {
      bool separated = false;
      for (std::uint64_t u : opens)
        if (((u >> x) & 1U) != ((u >> y) & 1U)) separated = true;
      if (!separated) return false;
    }
  return true;
}

FiniteFrame chain(int n) {
  if (n < 1) throw std::invalid_argument("chain: n must be positive");
  OrderMatrix leq = Poset::chain(n).leq;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return validate_frame(leq, std::move(labels));
}

FiniteFrame boolean(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("boolean: k must be in [0, 6]");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) masks.push_back(m);
  return frame_of_masks(std::move(masks));
}

std::vector<std::uint64_t> downsets_of(const Poset& p) {
  if (p.m > 24) throw std::invalid_argument("downsets_of: poset too large");
  std::vector<std::uint64_t> below(static_cast<std::size_t>(p.m), 0);
  for (int i = 0; i < p.m; ++i)
    for (int j = 0; j < p.m; ++j)
      if (p.leq[j][i]) below[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << p.m); ++d) {
    bool closed = true;
    for (int i = 0; i < p.m && closed; ++i)
      if (((d >> i) & 1U) && (below[static_cast<std::size_t>(i)] & ~d)) closed = false;
    if (closed) out.push_back(d);
    if (out.size() > static_cast<std::size_t>(kMaxFrameSize))
      throw FrameError(FrameError::Kind::kTooLarge, {}, "downset frame has more than 64 elements");
  }
  std::sort(out.begin(), out.end(), by_size_then_mask);
  return out;
}

FiniteFrame downset_frame(const Poset& p) { return frame_of_masks(downsets_of(p)); }

FiniteFrame open_set_frame(const FiniteSpace& x) { return frame_of_masks(x.opens); }

Poset join_irreducibles(const FiniteFrame& f) {
  std::vector<Element> irreducible;
  for (Element a = 0; a < f.size(); ++a) {
    if (a == f.bottom()) continue;
    int lower_covers = 0;
    for (const auto& [lo, hi] : f.covers())
      if (hi == a) ++lower_covers;
    if (lower_covers == 1) irreducible.push_back(a);
  }
  const std::size_t m = irreducible.size();
  OrderMatrix leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = f.leq(irreducible[i], irreducible[j]);
  return Poset{static_cast<int>(m), std::move(leq)};
}

FiniteFrame add_bottom(const FiniteFrame& f) {
  const std::size_t n = static_cast<std::size_t>(f.size()) + 1;
  if (n > static_cast<std::size_t>(kMaxFrameSize))
    throw FrameError(FrameError::Kind::kTooLarge, {}, "add_bottom: result has more than 64 elements");
  OrderMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels{"bot"};
  for (std::size_t j = 0; j < n; ++j) leq[0][j] = true;
  for (Element a = 0; a < f.size(); ++a) {
    labels.push_back(f.label(a));
    for (Element b = 0; b < f.size(); ++b)
      leq[static_cast<std::size_t>(a) + 1][static_cast<std::size_t>(b) + 1] = f.leq(a, b);
  }
  FiniteFrame lifted = validate_frame(leq, std::move(labels));

  for (Element a = 1; a < lifted.size(); ++a)
    for (Element b = 1; b < lifted.size(); ++b)
      ensure(lifted.meet(a, b) != lifted.bottom(), "add_bottom: new bottom is not prime");
  ensure(satisfies_idm(lifted), "add_bottom: result is not IDM");
  PropertyEvaluator before(f);
  PropertyEvaluator after(lifted);
  ensure(before.hereditary(Property::kIdm).holds == after.hereditary(Property::kIdm).holds,
         "add_bottom: hereditary IDM changed");
  ensure(before.hereditary(Property::kIed).holds == after.hereditary(Property::kIed).holds,
         "add_bottom: hereditary IED changed");
  return lifted;
}

std::vector<Poset> enumerate_posets(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_posets: negative size");
  if (m > kMaxCorpusPosetSize)
    throw BudgetExceeded("poset enumeration above size " + std::to_string(kMaxCorpusPosetSize));
  std::vector<std::vector<std::uint64_t>> labelled;
  std::vector<std::uint64_t> below;
  extend(below, m, labelled);

  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& strict_below : labelled) {
    OrderMatrix leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
    for (int j = 0; j < m; ++j) {
      leq[j][j] = true;
      for (int i = 0; i < m; ++i)
        if ((strict_below[static_cast<std::size_t>(j)] >> i) & 1U) leq[i][j] = true;
    }
    seen.insert(canonical_form(leq).rows);
  }
  std::vector<Poset> out;
  for (const auto& rows : seen) {
    OrderMatrix leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) leq[i][j] = (rows[static_cast<std::size_t>(i)] >> j) & 1U;
    out.push_back(Poset::validated(std::move(leq)));
  }
  return out;
}

std::string corpus_id(int m, std::size_t k) {
  std::string index = std::to_string(k);
  while (index.size() < 3) index.insert(index.begin(), '0');
  return "p" + std::to_string(m) + "-" + index;
}

std::vector<CorpusEntry> enumerate_corpus(int max_poset_size) {
  if (max_poset_size > kMaxCorpusPosetSize)
    throw BudgetExceeded("corpus: poset size above " + std::to_string(kMaxCorpusPosetSize));
  std::vector<CorpusEntry> out;
  std::unordered_set<std::string> hashes;
  for (int m = 0; m <= max_poset_size; ++m) {
    const std::vector<Poset> posets = enumerate_posets(m);
    for (std::size_t k = 0; k < posets.size(); ++k) {
      FrameRef frame = share(downset_frame(posets[k]));
      std::string hash = canonical_hash(*frame);
      ensure(hashes.insert(hash).second, "corpus: two posets gave isomorphic frames");
      out.push_back({corpus_id(m, k), posets[k], std::move(frame), std::move(hash)});
    }
  }
  return out;
}

Sublocale s_fg_from_pairs(const FiniteFrame& f, const std::vector<std::pair<Element, Element>>& pairs) {
  ElementSet members;
  for (Element a = 0; a < f.size(); ++a) {
    bool keep = true;
    for (const auto& [x, y] : pairs)
      if (f.implies(x, a) != f.implies(y, a)) {
        keep = false;
        break;
      }
    if (keep) members.insert(a);
  }
  ensure(is_sublocale(f, members), "S_fg is not a sublocale");
  return Sublocale{members};
}

Sublocale s_fg(const FiniteFrame& f, const SubsetFunction& fn, const SubsetFunction& gn, int max_enumerated) {
  if (f.size() > max_enumerated)
    throw BudgetExceeded("s_fg: " + std::to_string(f.size()) + " elements exceed the subset enumeration limit");
  std::set<std::pair<Element, Element>> pairs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
    ElementSet subset(mask);
    pairs.emplace(fn(subset), gn(subset));
  }
  return s_fg_from_pairs(f, {pairs.begin(), pairs.end()});
}

std::vector<std::pair<Element, Element>> ied_defect_pairs(const FiniteFrame& f) {
  FamilyQuantifier q(12);
  std::array<Aggregate, 2> aggs{join_of(f), join_of(f, [&](Element a) { return f.double_neg(a); })};
  std::set<std::pair<Element, Element>> pairs;
  for (const FamilyTuple& t : q.tuples(f.elements(), aggs)) pairs.emplace(f.double_neg(t.values[0]), t.values[1]);
  return {pairs.begin(), pairs.end()};
}

std::optional<Sublocale> largest_dense_by_enumeration(const FiniteFrame& f, Property base, std::size_t budget) {
  const SublocaleLattice lattice = enumerate_sublocales(f, budget);
  std::vector<Sublocale> good;
  for (const Sublocale& s : lattice.members())
    if (is_dense(f, s) && satisfies(sub_frame_structure(f, s).frame, base)) good.push_back(s);
  for (const Sublocale& candidate : good) {
    bool largest = true;
    for (const Sublocale& other : good)
      if (!other.members.subset_of(candidate.members)) largest = false;
    if (largest) return candidate;
  }
  return std::nullopt;
}

LargestDense largest_dense_ied(const FiniteFrame& f, std::size_t budget) {
  LargestDense result{s_fg_from_pairs(f, ied_defect_pairs(f)), false};
  const Sublocale& s = result.sublocale;
  ensure(is_dense(f, s), "largest dense IED: S is not dense");
  ensure(satisfies_ied(sub_frame_structure(f, s).frame), "largest dense IED: S is not IED");
  ensure(booleanization(f).members.subset_of(s.members), "largest dense IED: S does not contain B_L");
  try {
    auto ied = largest_dense_by_enumeration(f, Property::kIed, budget);
    auto ed = largest_dense_by_enumeration(f, Property::kEd, budget);
    ensure(ied && *ied == s, "largest dense IED: differs from the enumerated maximum");
    ensure(ed && *ed == s, "largest dense IED: differs from the largest dense ED sublocale");
    result.cross_checked = true;
  } catch (const BudgetExceeded&) {
  }
  return result;
}

std::optional<LargestDense> largest_dense_idm(const FiniteFrame& f, std::size_t budget) {
  ensure(satisfies_bot_scattered(f), "finite frame is not bot-scattered");
  LargestDense result = largest_dense_ied(f, budget);
  ensure(satisfies_idm(sub_frame_structure(f, result.sublocale).frame), "largest dense IDM: S is not IDM");
  if (result.cross_checked) {
    auto idm = largest_dense_by_enumeration(f, Property::kIdm, budget);
    ensure(idm && *idm == result.sublocale, "largest dense IDM: differs from the enumerated maximum");
  }
  return result;
}

}  // namespace localelab
