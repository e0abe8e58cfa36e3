#include "localelab/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>

namespace localelab {

namespace {

using Colouring = std::vector<int>;

struct Relation {
  int n;
  std::vector<std::uint64_t> below;  // strict
  std::vector<std::uint64_t> above;  // strict
};

Colouring rank(const std::vector<std::vector<int>>& signatures) {
  std::vector<std::vector<int>> distinct = signatures;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colouring out(signatures.size());
  for (std::size_t i = 0; i < signatures.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signatures[i]) - distinct.begin());
  return out;
}

int class_count(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Colouring refine(const Relation& r, Colouring c) {
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(r.n));
    for (int v = 0; v < r.n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      std::vector<int> lower;
      std::vector<int> upper;
      for (int w = 0; w < r.n; ++w) {
        if ((r.below[static_cast<std::size_t>(v)] >> w) & 1U) lower.push_back(c[static_cast<std::size_t>(w)]);
        if ((r.above[static_cast<std::size_t>(v)] >> w) & 1U) upper.push_back(c[static_cast<std::size_t>(w)]);
      }
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      s.push_back(c[static_cast<std::size_t>(v)]);
      s.push_back(static_cast<int>(lower.size()));
      s.insert(s.end(), lower.begin(), lower.end());
      s.push_back(-1);
      s.insert(s.end(), upper.begin(), upper.end());
    }
    Colouring next = rank(sig);
    if (class_count(next) == class_count(c)) return next;
    c = std::move(next);
  }
}

std::vector<std::uint64_t> permuted_rows(const Relation& r, const std::vector<int>& order) {
  std::vector<int> position(static_cast<std::size_t>(r.n));
  for (int i = 0; i < r.n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r.n), 0);
  for (int i = 0; i < r.n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    std::uint64_t up = r.above[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
    for (int w = 0; w < r.n; ++w)
      if ((up >> w) & 1U) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << position[static_cast<std::size_t>(w)];
  }
  return rows;
}

struct Search {
  const Relation& r;
  std::optional<std::vector<std::uint64_t>> best_rows;
  std::vector<int> best_order;

  void descend(const Colouring& c) {
    const int classes = class_count(c);
    if (classes == r.n) {
      std::vector<int> order(static_cast<std::size_t>(r.n));
      for (int v = 0; v < r.n; ++v) order[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = v;
      auto rows = permuted_rows(r, order);
      if (!best_rows || rows < *best_rows) {
        best_rows = std::move(rows);
        best_order = std::move(order);
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int col : c) ++size[static_cast<std::size_t>(col)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (int v = 0; v < r.n; ++v) {
      if (c[static_cast<std::size_t>(v)] != target) continue;
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(r.n));
      for (int w = 0; w < r.n; ++w) sig[static_cast<std::size_t>(w)] = {c[static_cast<std::size_t>(w)], w == v ? 0 : 1};
      descend(refine(r, rank(sig)));
    }
  }
};

}  // namespace

std::string CanonicalForm::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  feed(static_cast<std::uint64_t>(n));
  for (std::uint64_t row : rows) feed(row);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CanonicalForm canonical_form(const OrderMatrix& leq) {
  const int n = static_cast<int>(leq.size());
  if (n > kMaxFrameSize) throw std::invalid_argument("canonical_form: more than 64 elements");
  Relation r{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0),
             std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        r.above[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        r.below[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  CanonicalForm form;
  form.n = n;
  if (n == 0) return form;
  Search search{r, std::nullopt, {}};
  search.descend(refine(r, Colouring(static_cast<std::size_t>(n), 0)));
  form.rows = std::move(*search.best_rows);
  form.order = std::move(search.best_order);
  return form;
}

CanonicalForm canonical_form(const FiniteFrame& frame) { return canonical_form(frame.order()); }

std::string canonical_hash(const FiniteFrame& frame) { return canonical_form(frame).hash(); }

bool isomorphic(const FiniteFrame& a, const FiniteFrame& b) {
  return a.size() == b.size() && canonical_form(a).same_shape(canonical_form(b));
}

}  // namespace localelab
