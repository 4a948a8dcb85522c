#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "isoset/bit_vector.hpp"

namespace isoset {

using Element = std::uint32_t;

/// A subset of the 1-based universe [1, universe]. Element e lives in bit e-1.
class Subset {
 public:
  Subset() = default;
  /// Empty subset of [1, universe]. Throws InputError if universe == 0.
  explicit Subset(Element universe);
  /// Throws InputError for elements outside [1, universe].
  Subset(Element universe, std::initializer_list<Element> elements);
  Subset(Element universe, std::span<const Element> elements);

  [[nodiscard]] Element universe() const noexcept { return universe_; }
  [[nodiscard]] std::size_t cardinality() const noexcept { return bits_.count(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.none(); }
  [[nodiscard]] bool contains(Element e) const noexcept {
    return e >= 1 && e <= universe_ && bits_.test(e - 1);
  }
  void insert(Element e);
  void erase(Element e);

  /// Elements in ascending order.
  [[nodiscard]] std::vector<Element> elements() const;
  [[nodiscard]] Element max_element() const noexcept;
  [[nodiscard]] const BitVector& bits() const noexcept { return bits_; }

  [[nodiscard]] Subset complement() const;
  /// Same elements, embedded in a larger (or equal) universe.
  [[nodiscard]] Subset widened(Element new_universe) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
    if (auto c = a.universe_ <=> b.universe_; c != 0) {
      return c;
    }
    return a.bits_ <=> b.bits_;
  }

 private:
  Element universe_ = 0;
  BitVector bits_;
};

/// Throws InputError when the universes differ.
[[nodiscard]] bool intersects(const Subset& a, const Subset& b);
[[nodiscard]] Subset set_union(const Subset& a, const Subset& b);
[[nodiscard]] Subset set_intersection(const Subset& a, const Subset& b);

std::ostream& operator<<(std::ostream& os, const Subset& s);

}  // namespace isoset
