#include <algorithm>
#include <string>
#include <unordered_set>

#include "isoset/errors.hpp"
#include "isoset/oracle.hpp"

namespace isoset {

std::vector<std::pair<std::size_t, std::size_t>> greedy_isolation_entries(const BoolMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  BitVector used_rows(m.n_rows());
  BitVector used_cols(m.n_cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      if (!m.get(i, j) || used_cols.test(j)) {
        continue;
      }
      const bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](const auto& e) {
        return !(m.get(i, e.second) && m.get(e.first, j));
      });
      if (compatible) {
        chosen.emplace_back(i, j);
        used_rows.set(i);
        used_cols.set(j);
        break;
      }
    }
  }
  return chosen;
}

std::uint64_t fooling_lower_bound(const BoolMatrix& m) {
  return greedy_isolation_entries(m).size();
}

std::optional<std::vector<Rectangle>> maximal_rectangles(const BoolMatrix& m, std::uint64_t cap) {
  std::vector<BitVector> columns;
  columns.reserve(m.n_cols());
  for (std::size_t j = 0; j < m.n_cols(); ++j) {
    columns.push_back(m.column(j));
  }
  const auto rows_containing = [&](const BitVector& cols) {
    BitVector rows(m.n_rows(), true);
    cols.for_each_set([&](std::size_t j) { rows &= columns[j]; });
    return rows;
  };

  // Column sets of maximal rectangles are the nonempty intersections of row supports.
  std::vector<BitVector> closed;
  std::unordered_set<BitVector, BitVectorHash> seen;
  std::vector<Rectangle> out;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    const BitVector& support = m.row(i);
    if (support.none()) {
      continue;
    }
    std::vector<BitVector> candidates{support};
    for (const BitVector& c : closed) {
      candidates.push_back(c & support);
    }
    for (BitVector& cols : candidates) {
      if (cols.none() || seen.contains(cols)) {
        continue;
      }
      seen.insert(cols);
      out.push_back({rows_containing(cols).positions(), cols.positions()});
      closed.push_back(std::move(cols));
      if (out.size() > cap) {
        return std::nullopt;
      }
    }
  }
  return out;
}

std::pair<BoolMatrix, BoolMatrix> cover_to_factors(const std::vector<Rectangle>& cover,
                                                   std::size_t n_rows, std::size_t n_cols) {
  BoolMatrix x(n_rows, cover.size());
  BoolMatrix y(cover.size(), n_cols);
  for (std::size_t c = 0; c < cover.size(); ++c) {
    for (const std::size_t i : cover[c].rows) {
      if (i >= n_rows) {
        throw InputError("rectangle row " + std::to_string(i) + " is out of range");
      }
      x.set(i, c, true);
    }
    for (const std::size_t j : cover[c].cols) {
      if (j >= n_cols) {
        throw InputError("rectangle column " + std::to_string(j) + " is out of range");
      }
      y.set(c, j, true);
    }
  }
  return {std::move(x), std::move(y)};
}

bool is_exact_cover(const BoolMatrix& m, const std::vector<Rectangle>& cover) {
  BoolMatrix covered(m.n_rows(), m.n_cols());
  for (const Rectangle& r : cover) {
    for (const std::size_t i : r.rows) {
      for (const std::size_t j : r.cols) {
        if (i >= m.n_rows() || j >= m.n_cols() || !m.get(i, j)) {
          return false;
        }
        covered.set(i, j, true);
      }
    }
  }
  return covered == m;
}

namespace {

/// Set cover of the one-entries of M by maximal rectangles.
class CoverSearch {
 public:
  CoverSearch(const BoolMatrix& m, const std::vector<Rectangle>& rects, std::uint64_t max_nodes)
      : max_nodes_(max_nodes) {
    std::vector<std::size_t> entry_of(m.n_rows() * m.n_cols(), 0);
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      for (std::size_t j = 0; j < m.n_cols(); ++j) {
        if (m.get(i, j)) {
          entry_of[i * m.n_cols() + j] = n_entries_++;
        }
      }
    }
    containing_.resize(n_entries_);
    for (std::size_t r = 0; r < rects.size(); ++r) {
      BitVector bits(n_entries_);
      for (const std::size_t i : rects[r].rows) {
        for (const std::size_t j : rects[r].cols) {
          const std::size_t e = entry_of[i * m.n_cols() + j];
          bits.set(e);
          containing_[e].push_back(r);
        }
      }
      rect_bits_.push_back(std::move(bits));
    }
    reach_.assign(n_entries_, BitVector(n_entries_));
    for (std::size_t e = 0; e < n_entries_; ++e) {
      for (const std::size_t r : containing_[e]) {
        reach_[e] |= rect_bits_[r];
      }
    }
  }

  [[nodiscard]] std::size_t n_entries() const noexcept { return n_entries_; }

  /// Entries no two of which share a rectangle each need their own rectangle.
  [[nodiscard]] std::uint64_t packing_bound(BitVector uncovered) const {
    std::uint64_t count = 0;
    while (uncovered.any()) {
      std::size_t pick = uncovered.find_first();
      uncovered.for_each_set([&](std::size_t e) {
        if (containing_[e].size() < containing_[pick].size()) {
          pick = e;
        }
      });
      uncovered.and_not(reach_[pick]);
      ++count;
    }
    return count;
  }

  [[nodiscard]] std::vector<std::size_t> greedy_cover() const {
    std::vector<std::size_t> chosen;
    BitVector uncovered(n_entries_, true);
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t gain = 0;
      for (std::size_t r = 0; r < rect_bits_.size(); ++r) {
        const std::size_t g = rect_bits_[r].count_and(uncovered);
        if (g > gain) {
          gain = g;
          best = r;
        }
      }
      chosen.push_back(best);
      uncovered.and_not(rect_bits_[best]);
    }
    return chosen;
  }

  void run(std::vector<std::size_t> incumbent, std::uint64_t root_bound) {
    best_ = std::move(incumbent);
    root_bound_ = root_bound;
    if (root_bound_ >= best_.size()) {
      return;
    }
    dfs(BitVector(n_entries_, true));
  }

  [[nodiscard]] const std::vector<std::size_t>& best() const noexcept { return best_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] bool aborted() const noexcept { return aborted_; }

 private:
  void dfs(const BitVector& uncovered) {
    if (nodes_ >= max_nodes_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (uncovered.none()) {
      if (chosen_.size() < best_.size()) {
        best_ = chosen_;
      }
      return;
    }
    if (chosen_.size() + packing_bound(uncovered) >= best_.size()) {
      return;
    }
    std::size_t branch = uncovered.find_first();
    uncovered.for_each_set([&](std::size_t e) {
      if (containing_[e].size() < containing_[branch].size()) {
        branch = e;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain, rect)
    for (const std::size_t r : containing_[branch]) {
      order.emplace_back(static_cast<std::size_t>(0) - rect_bits_[r].count_and(uncovered), r);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [neg_gain, r] : order) {
      chosen_.push_back(r);
      BitVector next = uncovered;
      next.and_not(rect_bits_[r]);
      dfs(next);
      chosen_.pop_back();
      if (aborted_ || root_bound_ >= best_.size()) {
        return;
      }
    }
  }

  std::uint64_t max_nodes_;
  std::size_t n_entries_ = 0;
  std::vector<BitVector> rect_bits_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<BitVector> reach_;  ///< entries sharing a rectangle with each entry
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

/// One rectangle per nonzero row or per nonzero column, whichever is fewer.
std::vector<Rectangle> line_cover(const BoolMatrix& m) {
  std::vector<Rectangle> by_row;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    if (m.row(i).any()) {
      by_row.push_back({{i}, m.row(i).positions()});
    }
  }
  std::vector<Rectangle> by_col;
  for (std::size_t j = 0; j < m.n_cols(); ++j) {
    const BitVector col = m.column(j);
    if (col.any()) {
      by_col.push_back({col.positions(), {j}});
    }
  }
  return by_col.size() < by_row.size() ? by_col : by_row;
}


/// Index of a maximal rectangle containing each of `cover`.
std::vector<std::size_t> widen_to_maximal(const std::vector<Rectangle>& cover,
                                          const std::vector<Rectangle>& rects) {
  std::vector<std::size_t> out;
  for (const Rectangle& c : cover) {
    for (std::size_t r = 0; r < rects.size(); ++r) {
      if (std::includes(rects[r].rows.begin(), rects[r].rows.end(), c.rows.begin(), c.rows.end()) &&
          std::includes(rects[r].cols.begin(), rects[r].cols.end(), c.cols.begin(), c.cols.end())) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

}  // namespace

SearchResult boolean_rank_exact(const BoolMatrix& m, const RankBudget& budget,
                                const Limits& limits) {
  const std::size_t ones = m.count_ones();
  if (ones > limits.max_ones) {
    throw ResourceError("matrix has " + std::to_string(ones) +
                        " one-entries, above the rank solver cap of " +
                        std::to_string(limits.max_ones));
  }
  if (budget.max_nodes == 0) {
    throw InputError("rank budget needs max_nodes > 0");
  }

  SearchResult result;
  std::vector<Rectangle> lines = line_cover(m);
  const std::uint64_t fooling = fooling_lower_bound(m);
  const auto rects = maximal_rectangles(m, budget.max_bicliques);
  if (!rects) {
    result.optimum = lines.size();
    result.lower_bound = fooling;
    result.upper_bound = lines.size();
    result.cover = std::move(lines);
    result.complete = fooling == result.upper_bound;
    return result;
  }

  CoverSearch search(m, *rects, budget.max_nodes);
  const std::uint64_t root_bound =
      std::max(fooling, search.packing_bound(BitVector(search.n_entries(), true)));
  std::vector<std::size_t> incumbent = search.greedy_cover();
  std::vector<std::size_t> widened = widen_to_maximal(lines, *rects);
  if (widened.size() < incumbent.size()) {
    incumbent = std::move(widened);
  }
  search.run(std::move(incumbent), root_bound);

  std::vector<Rectangle> cover;
  for (const std::size_t r : search.best()) {
    cover.push_back((*rects)[r]);
  }
  result.optimum = cover.size();
  result.upper_bound = cover.size();
  result.complete = !search.aborted();
  result.lower_bound = result.complete ? result.optimum : root_bound;
  result.nodes_explored = search.nodes();
  result.cover = std::move(cover);
  return result;
}

}  // namespace isoset
