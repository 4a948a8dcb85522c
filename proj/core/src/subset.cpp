#include "isoset/subset.hpp"

#include <ostream>
#include <string>

#include "isoset/errors.hpp"

namespace isoset {

namespace {

void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe() != b.universe()) {
    throw InputError("subset universe mismatch: " + std::to_string(a.universe()) + " vs " +
                     std::to_string(b.universe()));
  }
}

}  // namespace

Subset::Subset(Element universe) : universe_(universe), bits_(universe) {
  if (universe == 0) {
    throw InputError("subset universe must be positive");
  }
}

Subset::Subset(Element universe, std::initializer_list<Element> elements)
    : Subset(universe, std::span<const Element>(elements.begin(), elements.size())) {}

Subset::Subset(Element universe, std::span<const Element> elements) : Subset(universe) {
  for (const Element e : elements) {
    insert(e);
  }
}

void Subset::insert(Element e) {
  if (e < 1 || e > universe_) {
    throw InputError("element " + std::to_string(e) + " outside [1, " + std::to_string(universe_) +
                     "]");
  }
  bits_.set(e - 1);
}

void Subset::erase(Element e) {
  if (e >= 1 && e <= universe_) {
    bits_.reset(e - 1);
  }
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(bits_.count());
  bits_.for_each_set([&](std::size_t p) { out.push_back(static_cast<Element>(p + 1)); });
  return out;
}

Element Subset::max_element() const noexcept {
  Element best = 0;
  bits_.for_each_set([&](std::size_t p) { best = static_cast<Element>(p + 1); });
  return best;
}

Subset Subset::complement() const {
  Subset out = *this;
  out.bits_.flip();
  return out;
}

Subset Subset::widened(Element new_universe) const {
  if (new_universe < universe_) {
    throw InputError("cannot shrink a subset universe from " + std::to_string(universe_) + " to " +
                     std::to_string(new_universe));
  }
  Subset out(new_universe);
  bits_.for_each_set([&](std::size_t p) { out.bits_.set(p); });
  return out;
}

bool intersects(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return a.bits().intersects(b.bits());
}

Subset set_union(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  Subset out(a.universe());
  for (const Element e : a.elements()) {
    out.insert(e);
  }
  for (const Element e : b.elements()) {
    out.insert(e);
  }
  return out;
}

Subset set_intersection(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  Subset out(a.universe());
  for (const Element e : a.elements()) {
    if (b.contains(e)) {
      out.insert(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  os << '{';
  bool first = true;
  for (const Element e : s.elements()) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  return os << '}';
}

}  // namespace isoset
