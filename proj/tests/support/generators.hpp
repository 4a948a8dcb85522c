#pragma once

// Fixed-seed generators shared by the property and acceptance suites.

#include <random>
#include <span>
#include <vector>

#include "isoset/bool_matrix.hpp"
#include "isoset/constructions.hpp"
#include "isoset/family.hpp"

namespace gen {

using isoset::BoolMatrix;
using isoset::Element;
using isoset::FamilyPair;
using isoset::Subset;

inline constexpr std::uint64_t kSeed = 0x150'5e7;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return (rng_() & 1U) != 0; }

  Subset subset(Element universe, std::size_t size) {
    std::vector<Element> pool(universe);
    for (Element e = 0; e < universe; ++e) {
      pool[e] = e + 1;
    }
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + below(universe - i)]);
    }
    return {universe, std::span<const Element>(pool.data(), size)};
  }

  Subset any_subset(Element universe) {
    Subset s(universe);
    for (Element e = 1; e <= universe; ++e) {
      if (coin()) {
        s.insert(e);
      }
    }
    return s;
  }

  /// A construction, perturbed half of the time so both verdicts occur.
  FamilyPair family() {
    FamilyPair base = [&] {
      switch (below(4)) {
        case 0: {
          const auto t = static_cast<Element>(1 + below(4));
          return isoset::identity_family(static_cast<Element>(2 * t + below(6)), t);
        }
        case 1: {
          const auto t = static_cast<Element>(2 + below(3));
          return isoset::isolation_construct(static_cast<Element>(2 * t + below(2 * t + 4)), t);
        }
        case 2:
          return isoset::triangular_construct(static_cast<std::uint32_t>(1 + below(3)),
                                      static_cast<std::uint32_t>(1 + below(3)));
        default: {
          const auto universe = static_cast<Element>(3 + below(8));
          const std::size_t size = 1 + below(6);
          const std::size_t a = 1 + below(universe / 2);
          const std::size_t b = 1 + below(universe / 2);
          std::vector<Subset> rows;
          std::vector<Subset> cols;
          for (std::size_t i = 0; i < size; ++i) {
            rows.push_back(subset(universe, a));
            cols.push_back(subset(universe, b));
          }
          return FamilyPair(universe, a, b, rows, cols);
        }
      }
    }();
    if (coin()) {
      return base;
    }
    std::vector<Subset> rows = base.rows();
    std::vector<Subset> cols = base.cols();
    const std::size_t i = below(rows.size());
    if (coin()) {
      rows[i] = subset(base.universe(), base.row_size());
    } else {
      cols[i] = subset(base.universe(), base.col_size());
    }
    return FamilyPair(base.universe(), base.row_size(), base.col_size(), rows, cols, base.meta());
  }

  /// Random isolation matrix: unit diagonal, at most one of (i,j), (j,i) set.
  BoolMatrix isolation_matrix(std::size_t n) {
    BoolMatrix m = BoolMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        switch (below(3)) {
          case 0:
            m.set(i, j);
            break;
          case 1:
            m.set(j, i);
            break;
          default:
            break;
        }
      }
    }
    return m;
  }

  BoolMatrix matrix(std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i, j, below(5) < 3);
      }
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
