#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isoset/bit_vector.hpp"
#include "isoset/bool_matrix.hpp"
#include "isoset/limits.hpp"
#include "isoset/search_result.hpp"
#include "isoset/subset.hpp"

namespace isoset {

enum class CompatKind {
  /// (x1,y1) ~ (x2,y2) iff x1 != x2, y1 != y2 and one cross pair is disjoint.
  isolation,
  /// Both cross pairs disjoint.
  identity,
};

/// Graph on the one-entries of A_{k,t} whose cliques are exactly the isolation
/// (or identity) sets. Vertices are ordered column-major over colex subset order.
class CompatGraph {
 public:
  struct Vertex {
    std::size_t row;  ///< index into subsets()
    std::size_t col;
  };

  /// RangeError unless 1 <= t <= k; ResourceError past limits.max_dim or
  /// limits.max_graph_vertices.
  [[nodiscard]] static CompatGraph build(Element k, Element t, CompatKind kind,
                                         const Limits& limits = {});

  [[nodiscard]] Element k() const noexcept { return k_; }
  [[nodiscard]] Element t() const noexcept { return t_; }
  [[nodiscard]] const std::vector<Subset>& subsets() const noexcept { return subsets_; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<BitVector>& adjacency() const noexcept { return adjacency_; }
  /// Vertex index of the pair (row, col), if they intersect.
  [[nodiscard]] std::optional<std::size_t> find(std::size_t row, std::size_t col) const;

 private:
  Element k_ = 0;
  Element t_ = 0;
  std::vector<Subset> subsets_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> index_;  ///< row * dim + col -> vertex, or npos
  std::vector<BitVector> adjacency_;
};

/// Exact maximum isolation set of A_{k,t}. The witness passes verify_isolation.
[[nodiscard]] SearchResult max_isolation_bruteforce(Element k, Element t, const RankBudget& budget = {},
                                                    const Limits& limits = {});

/// Exact maximum identity submatrix of A_{k,t}. The witness passes verify_identity.
[[nodiscard]] SearchResult max_identity_bruteforce(Element k, Element t, const RankBudget& budget = {},
                                                   const Limits& limits = {});

/// Longest sequence of pairs (A_i, B_i), |A_i| = a, |B_i| = b over [k], with
/// A_i meeting B_j iff i >= j. Requires k <= 64. The witness passes verify_triangular.
[[nodiscard]] SearchResult max_triangular_bruteforce(std::uint32_t a, std::uint32_t b, Element k,
                                                     const RankBudget& budget = {},
                                                     const Limits& limits = {});

// --- Boolean rank -----------------------------------------------------------

/// Entries of a greedily grown isolation set, scanning M row-major.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> greedy_isolation_entries(
    const BoolMatrix& m);

/// Size of greedy_isolation_entries(m); a lower bound on the Boolean rank.
[[nodiscard]] std::uint64_t fooling_lower_bound(const BoolMatrix& m);

/// Every maximal all-ones rectangle of m, or nullopt once more than `cap` exist.
[[nodiscard]] std::optional<std::vector<Rectangle>> maximal_rectangles(const BoolMatrix& m,
                                                                       std::uint64_t cap);

/// Factor matrices of a cover: X[i][c] = 1 iff row i is in rectangle c,
/// Y[c][j] = 1 iff column j is in rectangle c.
[[nodiscard]] std::pair<BoolMatrix, BoolMatrix> cover_to_factors(const std::vector<Rectangle>& cover,
                                                                 std::size_t n_rows,
                                                                 std::size_t n_cols);

/// True iff the union of the rectangles is exactly the set of one-entries of m.
[[nodiscard]] bool is_exact_cover(const BoolMatrix& m, const std::vector<Rectangle>& cover);

/// Exact Boolean rank (minimum biclique cover) by branch and bound over the
/// maximal rectangles. `cover` is an optimal cover when complete; otherwise the
/// best cover found, with the true rank in [lower_bound, upper_bound].
[[nodiscard]] SearchResult boolean_rank_exact(const BoolMatrix& m, const RankBudget& budget = {},
                                              const Limits& limits = {});

}  // namespace isoset
