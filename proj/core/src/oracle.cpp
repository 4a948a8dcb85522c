#include "isoset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "isoset/clique.hpp"
#include "isoset/errors.hpp"
#include "isoset/intersection.hpp"

namespace isoset {

namespace {

constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

void require_kt(Element k, Element t) {
  if (t < 1 || t > k) {
    throw RangeError("search needs 1 <= t <= k, got k=" + std::to_string(k) +
                     ", t=" + std::to_string(t));
  }
}

std::string kt_label(Element k, Element t) {
  return "A_{" + std::to_string(k) + "," + std::to_string(t) + "}";
}

}  // namespace

// --- CompatGraph ------------------------------------------------------------

CompatGraph CompatGraph::build(Element k, Element t, CompatKind kind, const Limits& limits) {
  require_kt(k, t);
  const std::uint64_t dim = binomial(k, t);
  if (dim > limits.max_dim) {
    throw ResourceError(kt_label(k, t) + " has " + std::to_string(dim) +
                        " rows, above the cap of " + std::to_string(limits.max_dim));
  }
  // Each subset meets all but C(k-t, t) subsets.
  const std::uint64_t per_row = dim - binomial(k - t, t);
  if (per_row != 0 && dim > limits.max_graph_vertices / per_row) {
    throw ResourceError(kt_label(k, t) + " has " + std::to_string(dim * per_row) +
                        " one-entries, above the graph vertex cap of " +
                        std::to_string(limits.max_graph_vertices));
  }

  CompatGraph g;
  g.k_ = k;
  g.t_ = t;
  g.subsets_ = enumerate_t_subsets(k, t);
  const std::size_t n = g.subsets_.size();

  std::vector<BitVector> meets(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      meets[i].assign(j, g.subsets_[i].bits().intersects(g.subsets_[j].bits()));
    }
  }

  g.index_.assign(n * n, kNoVertex);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      if (meets[row].test(col)) {
        g.index_[row * n + col] = g.vertices_.size();
        g.vertices_.push_back({row, col});
      }
    }
  }

  const std::size_t v = g.vertices_.size();
  g.adjacency_.assign(v, BitVector(v));
  for (std::size_t a = 0; a < v; ++a) {
    const Vertex& p = g.vertices_[a];
    for (std::size_t b = a + 1; b < v; ++b) {
      const Vertex& q = g.vertices_[b];
      if (p.row == q.row || p.col == q.col) {
        continue;
      }
      const bool cross1 = meets[p.row].test(q.col);
      const bool cross2 = meets[q.row].test(p.col);
      const bool edge = kind == CompatKind::isolation ? !(cross1 && cross2) : !cross1 && !cross2;
      if (edge) {
        g.adjacency_[a].set(b);
        g.adjacency_[b].set(a);
      }
    }
  }
  return g;
}

std::optional<std::size_t> CompatGraph::find(std::size_t row, std::size_t col) const {
  const std::size_t n = subsets_.size();
  if (row >= n || col >= n || index_[row * n + col] == kNoVertex) {
    return std::nullopt;
  }
  return index_[row * n + col];
}

// --- clique-based oracles ---------------------------------------------------

namespace {

std::size_t subset_index(const std::vector<Subset>& subsets, const Subset& s) {
  const auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  return static_cast<std::size_t>(it - subsets.begin());
}

/// The symmetric group on [k] acts on intersecting pairs (x, y) of t-subsets with one
/// orbit per overlap size |x & y| = s. A maximum clique meets some first orbit s, so it
/// suffices to search cliques through one representative of orbit s that avoid the
/// orbits already searched.
std::vector<CliqueRoot> orbit_roots(const CompatGraph& g) {
  const Element k = g.k();
  const Element t = g.t();
  const std::size_t v = g.vertices().size();
  std::vector<std::size_t> overlap(v);
  for (std::size_t i = 0; i < v; ++i) {
    const auto& vx = g.vertices()[i];
    overlap[i] = g.subsets()[vx.row].bits().count_and(g.subsets()[vx.col].bits());
  }
  std::vector<CliqueRoot> roots;
  std::vector<Element> first(t);
  for (Element e = 1; e <= t; ++e) {
    first[e - 1] = e;
  }
  const Subset x(k, std::span<const Element>(first));
  for (Element s = 1; s <= t; ++s) {
    if (2 * t - s > k) {
      continue;
    }
    std::vector<Element> second;
    for (Element e = t - s + 1; e <= 2 * t - s; ++e) {
      second.push_back(e);
    }
    const Subset y(k, std::span<const Element>(second));
    const auto vertex = g.find(subset_index(g.subsets(), x), subset_index(g.subsets(), y));
    if (!vertex) {
      continue;
    }
    CliqueRoot root{*vertex, BitVector(v)};
    for (std::size_t i = 0; i < v; ++i) {
      root.allowed.assign(i, overlap[i] >= s);
    }
    roots.push_back(std::move(root));
  }
  return roots;
}

SearchResult clique_oracle(Element k, Element t, CompatKind kind, const RankBudget& budget,
                           const Limits& limits, const char* witness_name) {
  if (budget.max_nodes == 0) {
    throw InputError("search budget needs max_nodes > 0");
  }
  const CompatGraph g = CompatGraph::build(k, t, kind, limits);
  const std::vector<CliqueRoot> roots = orbit_roots(g);
  const CliqueOutcome found = max_clique(g.adjacency(), budget.max_nodes, roots);

  std::vector<Subset> rows;
  std::vector<Subset> cols;
  for (const std::size_t v : found.clique) {
    rows.push_back(g.subsets()[g.vertices()[v].row]);
    cols.push_back(g.subsets()[g.vertices()[v].col]);
  }
  SearchResult result;
  result.optimum = found.clique.size();
  result.lower_bound = result.optimum;
  result.upper_bound = found.upper_bound;
  result.nodes_explored = found.nodes;
  result.complete = found.complete;
  result.witness = FamilyPair(k, t, t, std::move(rows), std::move(cols),
                              {witness_name, {{"k", k}, {"t", t}}});
  return result;
}

}  // namespace

SearchResult max_isolation_bruteforce(Element k, Element t, const RankBudget& budget,
                                      const Limits& limits) {
  return clique_oracle(k, t, CompatKind::isolation, budget, limits, "max_isolation_witness");
}

SearchResult max_identity_bruteforce(Element k, Element t, const RankBudget& budget,
                                     const Limits& limits) {
  return clique_oracle(k, t, CompatKind::identity, budget, limits, "max_identity_witness");
}

// --- triangular search ------------------------------------------------------

namespace {

using Mask = std::uint64_t;

std::vector<Mask> masks_of_size(Element k, std::uint32_t size) {
  std::vector<Mask> out;
  for (const Subset& s : enumerate_t_subsets(k, size)) {
    out.push_back(s.bits().words().front());
  }
  return out;
}

/// The `n` lowest set bits of `pool`.
Mask lowest_bits(Mask pool, int n) {
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    const Mask low = pool & (~pool + 1);
    out |= low;
    pool ^= low;
  }
  return out;
}

/// Longest extension of a prefix. The future depends on the prefix only through
/// the union of its row sets (new columns must avoid it) and the set of its column
/// sets (new rows must meet each one), so results are memoised on that pair.
/// Elements unused by the prefix are interchangeable, so a new set only ever takes
/// the lowest unused ones.
class TriangularSearch {
 public:
  TriangularSearch(Element k, std::uint32_t a, std::uint32_t b, std::uint64_t max_nodes)
      : full_(k == 64 ? ~Mask{0} : (Mask{1} << k) - 1),
        rows_(masks_of_size(k, a)),
        cols_(masks_of_size(k, b)),
        max_nodes_(max_nodes) {}

  int solve(Mask row_union, std::vector<Mask>& col_sets) {
    std::vector<Mask> key;
    key.reserve(col_sets.size() + 1);
    key.push_back(row_union);
    key.insert(key.end(), col_sets.begin(), col_sets.end());
    std::sort(key.begin() + 1, key.end());
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second.value;
    }
    if (nodes_ >= max_nodes_) {
      aborted_ = true;
      return 0;
    }
    ++nodes_;

    Mask used = row_union;
    for (const Mask c : col_sets) {
      used |= c;
    }
    const Mask fresh = full_ & ~used;
    Memo best;
    for (const Mask row : rows_) {
      const Mask row_fresh = row & fresh;
      if (row_fresh != lowest_bits(fresh, std::popcount(row_fresh))) {
        continue;
      }
      if (!std::all_of(col_sets.begin(), col_sets.end(), [&](Mask c) { return (row & c) != 0; })) {
        continue;
      }
      const Mask fresh_after = fresh & ~row;
      for (const Mask col : cols_) {
        if ((col & row) == 0 || (col & row_union) != 0) {
          continue;
        }
        const Mask col_fresh = col & fresh_after;
        if (col_fresh != lowest_bits(fresh_after, std::popcount(col_fresh))) {
          continue;
        }
        col_sets.push_back(col);
        const int value = 1 + solve(row_union | row, col_sets);
        col_sets.pop_back();
        if (value > best.value) {
          best = {value, row, col};
        }
        if (aborted_) {
          break;
        }
      }
      if (aborted_) {
        break;
      }
    }
    memo_.emplace(std::move(key), best);
    return best.value;
  }

  /// Replays the memoised best moves from the empty prefix.
  std::vector<std::pair<Mask, Mask>> witness() const {
    std::vector<std::pair<Mask, Mask>> out;
    Mask row_union = 0;
    std::vector<Mask> col_sets;
    while (true) {
      std::vector<Mask> key{row_union};
      key.insert(key.end(), col_sets.begin(), col_sets.end());
      std::sort(key.begin() + 1, key.end());
      const auto it = memo_.find(key);
      if (it == memo_.end() || it->second.value == 0) {
        break;
      }
      out.emplace_back(it->second.row, it->second.col);
      row_union |= it->second.row;
      col_sets.push_back(it->second.col);
    }
    return out;
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] bool aborted() const noexcept { return aborted_; }

 private:
  struct Memo {
    int value = 0;
    Mask row = 0;
    Mask col = 0;
  };

  Mask full_;
  std::vector<Mask> rows_;
  std::vector<Mask> cols_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::map<std::vector<Mask>, Memo> memo_;
};

Subset subset_from_mask(Element k, Mask m) {
  Subset s(k);
  while (m != 0) {
    s.insert(static_cast<Element>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return s;
}

}  // namespace

SearchResult max_triangular_bruteforce(std::uint32_t a, std::uint32_t b, Element k,
                                       const RankBudget& budget, const Limits& limits) {
  if (a < 1 || b < 1 || a > k || b > k) {
    throw RangeError("triangular search needs 1 <= a, b <= k, got a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", k=" + std::to_string(k));
  }
  if (k > 64) {
    throw ResourceError("triangular search supports k <= 64, got k=" + std::to_string(k));
  }
  const std::uint64_t rows = binomial(k, a);
  const std::uint64_t cols = binomial(k, b);
  if (rows > limits.max_pairs || cols > limits.max_pairs / rows) {
    throw ResourceError("triangular search over " + std::to_string(rows) + " x " +
                        std::to_string(cols) + " candidate pairs exceeds the cap of " +
                        std::to_string(limits.max_pairs));
  }
  if (budget.max_nodes == 0) {
    throw InputError("search budget needs max_nodes > 0");
  }

  TriangularSearch search(k, a, b, budget.max_nodes);
  std::vector<Mask> col_sets;
  const int best = search.solve(0, col_sets);

  std::vector<Subset> row_sets;
  std::vector<Subset> col_subsets;
  for (const auto& [row, col] : search.witness()) {
    row_sets.push_back(subset_from_mask(k, row));
    col_subsets.push_back(subset_from_mask(k, col));
  }
  SearchResult result;
  result.optimum = static_cast<std::uint64_t>(best);
  result.lower_bound = result.optimum;
  result.complete = !search.aborted();
  // Rows of a triangular family are pairwise distinct, and so are its columns.
  result.upper_bound = result.complete ? result.optimum : std::min(rows, cols);
  result.nodes_explored = search.nodes();
  result.witness = FamilyPair(k, a, b, std::move(row_sets), std::move(col_subsets),
                              {"max_triangular_witness", {{"a", a}, {"b", b}, {"k", k}}});
  return result;
}

}  // namespace isoset
