#include "localelab/families.hpp"

#include <algorithm>
#include <unordered_map>

namespace localelab {

namespace {

Aggregate make_aggregate(const FiniteFrame& f, const std::function<Element(Element)>& map, bool meet) {
  Aggregate agg;
  agg.n = f.size();
  agg.map.resize(static_cast<std::size_t>(agg.n));
  for (Element a = 0; a < agg.n; ++a) agg.map[static_cast<std::size_t>(a)] = map ? map(a) : a;
  agg.op.resize(static_cast<std::size_t>(agg.n) * static_cast<std::size_t>(agg.n));
  for (Element a = 0; a < agg.n; ++a)
    for (Element b = 0; b < agg.n; ++b)
      agg.op[static_cast<std::size_t>(a) * static_cast<std::size_t>(agg.n) + static_cast<std::size_t>(b)] =
          meet ? f.meet(a, b) : f.join(a, b);
  return agg;
}

using Values = std::array<Element, kMaxAggregates>;

std::uint32_t pack(const Values& v) {
  std::uint32_t key = 0;
  for (Element x : v) key = (key << 6) | static_cast<std::uint32_t>(x);
  return key;
}

bool smaller_family(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

class TupleTable {
 public:
  void offer(const Values& v, ElementSet family) {
    auto [it, inserted] = index_.try_emplace(pack(v), tuples_.size());
    if (inserted) {
      tuples_.push_back({v, family});
    } else if (smaller_family(family, tuples_[it->second].family)) {
      tuples_[it->second].family = family;
    }
  }

  const std::vector<FamilyTuple>& tuples() const { return tuples_; }

  std::vector<FamilyTuple> sorted() && {
    std::sort(tuples_.begin(), tuples_.end(),
              [](const FamilyTuple& x, const FamilyTuple& y) { return smaller_family(x.family, y.family); });
    return std::move(tuples_);
  }

 private:
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<FamilyTuple> tuples_;
};

Values add_member(const Values& v, std::span<const Aggregate> aggs, Element x) {
  Values out = v;
  for (std::size_t i = 0; i < aggs.size(); ++i) out[i] = aggs[i].apply(v[i], aggs[i].map[static_cast<std::size_t>(x)]);
  return out;
}

Values start(std::span<const Aggregate> aggs, Element x) {
  Values out{};
  for (std::size_t i = 0; i < aggs.size(); ++i) out[i] = aggs[i].map[static_cast<std::size_t>(x)];
  return out;
}

void check_arity(std::span<const Aggregate> aggs) {
  if (aggs.empty() || aggs.size() > kMaxAggregates) throw std::invalid_argument("between 1 and 4 aggregates required");
}

}  // namespace

Aggregate meet_of(const FiniteFrame& f, const std::function<Element(Element)>& map) {
  return make_aggregate(f, map, true);
}
Aggregate join_of(const FiniteFrame& f, const std::function<Element(Element)>& map) {
  return make_aggregate(f, map, false);
}
Aggregate meet_of(const FiniteFrame& f) { return make_aggregate(f, nullptr, true); }
Aggregate join_of(const FiniteFrame& f) { return make_aggregate(f, nullptr, false); }

std::vector<FamilyTuple> tuples_by_enumeration(ElementSet domain, std::span<const Aggregate> aggs) {
  check_arity(aggs);
  const std::vector<Element> members = domain.to_vector();
  TupleTable table;
  // Depth-first over include/exclude decisions, carrying the partial folds.
  struct Frame {
    std::size_t next;
    Values values;
    ElementSet family;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < members.size(); ++i)
    stack.push_back({i + 1, start(aggs, members[i]), ElementSet::singleton(members[i])});
  while (!stack.empty()) {
    Frame top = stack.back();
    stack.pop_back();
    table.offer(top.values, top.family);
    for (std::size_t j = top.next; j < members.size(); ++j) {
      ElementSet fam = top.family;
      fam.insert(members[j]);
      stack.push_back({j + 1, add_member(top.values, aggs, members[j]), fam});
    }
  }
  return std::move(table).sorted();
}

std::vector<FamilyTuple> tuples_by_closure(ElementSet domain, std::span<const Aggregate> aggs) {
  check_arity(aggs);
  TupleTable table;
  for (Element x : domain) {
    // Snapshot: extend only families built from earlier members.
    const std::vector<FamilyTuple> before = table.tuples();
    table.offer(start(aggs, x), ElementSet::singleton(x));
    for (const FamilyTuple& t : before) {
      ElementSet fam = t.family;
      fam.insert(x);
      table.offer(add_member(t.values, aggs, x), fam);
    }
  }
  return std::move(table).sorted();
}

std::vector<FamilyTuple> FamilyQuantifier::tuples(ElementSet domain, std::span<const Aggregate> aggs) const {
  return enumerates(domain) ? tuples_by_enumeration(domain, aggs) : tuples_by_closure(domain, aggs);
}

std::optional<ElementSet> FamilyQuantifier::counterexample(ElementSet domain, std::span<const Aggregate> aggs,
                                                           const Predicate& holds) const {
  for (const FamilyTuple& t : tuples(domain, aggs))
    if (!holds(t.values)) return t.family;
  return std::nullopt;
}

}  // namespace localelab
