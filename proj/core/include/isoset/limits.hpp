#pragma once

#include <cstdint>

namespace isoset {

/// Size caps that keep matrices and brute-force searches tractable.
struct Limits {
  /// Maximum number of t-subsets, i.e. rows of A_{k,t}.
  std::uint64_t max_dim = std::uint64_t{1} << 16;
  /// Maximum vertex count of a compatibility graph handed to the clique search.
  std::uint64_t max_graph_vertices = 8192;
  /// Maximum number of candidate (row, column) pairs in the triangular search.
  std::uint64_t max_pairs = 1'000'000;
  /// Maximum number of one-entries in a matrix passed to the rank solver.
  std::uint64_t max_ones = 16384;
  /// Largest element the triangular allocator may hand out.
  std::uint64_t max_universe = std::uint64_t{1} << 20;

  /// Defaults, with max_dim overridden by ISOSET_MAX_DIM when set to a positive integer.
  [[nodiscard]] static Limits from_environment();
};

/// n choose k, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace isoset
