#include "isoset/intersection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isoset/errors.hpp"

namespace isoset {

BoolMatrix family_to_matrix(const FamilyPair& fp) {
  BoolMatrix m(fp.rows().size(), fp.cols().size());
  for (std::size_t i = 0; i < fp.rows().size(); ++i) {
    for (std::size_t j = 0; j < fp.cols().size(); ++j) {
      m.set(i, j, fp.rows()[i].bits().intersects(fp.cols()[j].bits()));
    }
  }
  return m;
}

std::vector<Subset> enumerate_t_subsets(Element k, Element t) {
  if (t < 1 || t > k) {
    throw RangeError("t-subset enumeration needs 1 <= t <= k, got k=" + std::to_string(k) +
                     ", t=" + std::to_string(t));
  }
  std::vector<Subset> out;
  const std::uint64_t total = binomial(k, t);
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(total, std::uint64_t{1} << 24)));

  // Colex successor: bump the lowest position that can move up, reset the ones below it.
  std::vector<Element> c(t);
  std::iota(c.begin(), c.end(), Element{1});
  while (true) {
    out.emplace_back(k, std::span<const Element>(c));
    std::size_t i = 0;
    while (i < t) {
      const Element limit = (i + 1 < t) ? c[i + 1] : k + 1;
      if (c[i] + 1 < limit) {
        break;
      }
      ++i;
    }
    if (i == t) {
      break;
    }
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) {
      c[j] = static_cast<Element>(j + 1);
    }
  }
  return out;
}

BoolMatrix build_A(Element k, Element t, const Limits& limits) {
  if (t < 1 || t > k) {
    throw RangeError("A_{k,t} needs 1 <= t <= k, got k=" + std::to_string(k) +
                     ", t=" + std::to_string(t));
  }
  const std::uint64_t dim = binomial(k, t);
  if (dim > limits.max_dim) {
    throw ResourceError("A_{" + std::to_string(k) + "," + std::to_string(t) + "} has " +
                        std::to_string(dim) + " rows, above the cap of " +
                        std::to_string(limits.max_dim));
  }
  const std::vector<Subset> subsets = enumerate_t_subsets(k, t);
  BoolMatrix m(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i; j < subsets.size(); ++j) {
      const bool hit = subsets[i].bits().intersects(subsets[j].bits());
      m.set(i, j, hit);
      m.set(j, i, hit);
    }
  }
  return m;
}

}  // namespace isoset
