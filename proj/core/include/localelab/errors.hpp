#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "localelab/element_set.hpp"

namespace localelab {

/// Raised when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical claim the library relies on fails on a concrete
/// instance. Seeing one of these means a bug, never bad input.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws SoundnessError with `what` unless `condition` holds.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw SoundnessError(what);
}

/// Rejected frame input. `witness` holds the element indices that exhibit the
/// violated axiom.
class FrameError : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kTooLarge,
    kMalformed,
    kNotAPartialOrder,
    kNotALattice,
    kNotDistributive,
  };

  FrameError(Kind kind, std::vector<Element> witness, const std::string& message)
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<Element>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<Element> witness_;
};

}  // namespace localelab
