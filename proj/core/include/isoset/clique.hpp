#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isoset/bit_vector.hpp"

namespace isoset {

/// Search every clique that contains `vertex` and otherwise uses only `allowed`.
struct CliqueRoot {
  std::size_t vertex = 0;
  BitVector allowed;
};

struct CliqueOutcome {
  std::vector<std::size_t> clique;  ///< ascending vertex indices
  std::uint64_t nodes = 0;
  bool complete = false;
  /// Proven ceiling: clique.size() when complete, a colouring bound otherwise.
  std::size_t upper_bound = 0;
};

/// Exact maximum clique by branch and bound over bitset candidate sets, bounding
/// each node with a greedy sequential colouring. Vertex order is the index order,
/// so results and node counts are reproducible.
///
/// With `roots` empty the whole graph is searched; otherwise the answer is the best
/// clique over all roots. `adjacency` must be symmetric with an empty diagonal.
[[nodiscard]] CliqueOutcome max_clique(const std::vector<BitVector>& adjacency,
                                       std::uint64_t max_nodes,
                                       std::span<const CliqueRoot> roots = {});

/// Number of colours a greedy sequential colouring uses on `candidates`.
[[nodiscard]] std::size_t greedy_colour_bound(const std::vector<BitVector>& adjacency,
                                              const BitVector& candidates);

}  // namespace isoset
