#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isoset/family.hpp"

namespace isoset {

/// All-ones combinatorial rectangle of a matrix: rows x cols, 0-based, ascending.
struct Rectangle {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Caps for the brute-force oracles. Counted in search nodes, never wall-clock.
struct RankBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::uint64_t max_bicliques = 50'000;
};

/// Outcome of an exact search.
///
/// For maximisation problems `optimum` is the best size found; when `complete` is
/// false it is only a lower bound and `upper_bound` holds the proven ceiling.
/// For the Boolean-rank minimisation `optimum` is the incumbent cover size and
/// [lower_bound, upper_bound] brackets the true value.
struct SearchResult {
  std::uint64_t optimum = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::optional<FamilyPair> witness;
  std::vector<Rectangle> cover;
  std::uint64_t nodes_explored = 0;
  bool complete = false;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

}  // namespace isoset
