#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "localelab/frame.hpp"

namespace localelab {

/// Canonical relabelling of a finite order relation. Two relations are
/// isomorphic iff their canonical forms have equal `rows`.
struct CanonicalForm {
  int n = 0;
  /// rows[i] has bit j set iff (canonical i) <= (canonical j).
  std::vector<std::uint64_t> rows;
  /// order[i] is the original index placed at canonical position i.
  std::vector<int> order;

  bool same_shape(const CanonicalForm& other) const { return n == other.n && rows == other.rows; }
  /// 64-bit FNV-1a of the canonical matrix, as 16 hex digits.
  std::string hash() const;
};

/// Individualization-refinement: colour classes are refined by the colours of
/// strict lower and upper neighbours; ties are broken by trying every member of
/// the first non-singleton class. The lexicographically least permuted matrix
/// over all leaves is the canonical one. Requires n <= 64.
CanonicalForm canonical_form(const OrderMatrix& leq);
CanonicalForm canonical_form(const FiniteFrame& frame);

std::string canonical_hash(const FiniteFrame& frame);
bool isomorphic(const FiniteFrame& a, const FiniteFrame& b);

}  // namespace localelab
