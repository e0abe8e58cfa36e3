#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace localelab {

/// Index of an element inside a FiniteFrame. Valid indices are [0, frame.size()).
using Element = int;

/// Largest frame the library handles; element sets are 64-bit masks.
inline constexpr int kMaxFrameSize = 64;

/// A set of elements of one frame, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  /// {0, ..., n-1}
  static constexpr ElementSet all(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet singleton(Element e) { return ElementSet(std::uint64_t{1} << e); }
  static ElementSet from(const std::vector<Element>& elements) {
    ElementSet s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr Element first() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace localelab
