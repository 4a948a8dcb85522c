#include "isoset/clique.hpp"

#include <algorithm>

namespace isoset {

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<BitVector>& adjacency, std::uint64_t max_nodes)
      : adj_(adjacency), max_nodes_(max_nodes) {}

  void seed(std::vector<std::size_t> clique) {
    if (clique.size() > best_.size()) {
      best_ = std::move(clique);
    }
  }

  void run_from(std::size_t vertex, const BitVector& candidates) {
    if (aborted_) {
      return;
    }
    current_.assign(1, vertex);
    BitVector p = candidates & adj_[vertex];
    if (p.none()) {
      seed(current_);
    } else {
      expand(std::move(p), 0);
    }
    current_.clear();
  }

  void run(const BitVector& candidates) {
    if (candidates.any()) {
      expand(candidates, 0);
    }
  }

  [[nodiscard]] const std::vector<std::size_t>& best() const noexcept { return best_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] bool aborted() const noexcept { return aborted_; }

 private:
  // Greedy sequential colouring of p in index order; bounds[i] is the colour of order[i],
  // non-decreasing, so a suffix scan can prune as soon as the colour is too small.
  void colour(const BitVector& p, std::vector<std::size_t>& order,
              std::vector<std::size_t>& bounds) {
    order.clear();
    bounds.clear();
    BitVector uncoloured = p;
    BitVector q(p.size());
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      q = uncoloured;
      for (std::size_t v = q.find_first(); v != BitVector::npos; v = q.find_first()) {
        q.reset(v);
        uncoloured.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        bounds.push_back(colour);
      }
    }
  }

  void expand(BitVector p, std::size_t depth) {
    if (nodes_ >= max_nodes_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (orders_.size() <= depth) {
      orders_.resize(depth + 1);
      bounds_.resize(depth + 1);
    }
    colour(p, orders_[depth], bounds_[depth]);
    // The buffers for this depth stay untouched while deeper levels run.
    for (std::size_t i = orders_[depth].size(); i-- > 0;) {
      if (current_.size() + bounds_[depth][i] <= best_.size()) {
        return;
      }
      const std::size_t v = orders_[depth][i];
      current_.push_back(v);
      BitVector next = p & adj_[v];
      if (next.none()) {
        seed(current_);
      } else {
        expand(std::move(next), depth + 1);
      }
      current_.pop_back();
      if (aborted_) {
        return;
      }
      p.reset(v);
    }
  }

  const std::vector<BitVector>& adj_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::vector<std::vector<std::size_t>> orders_;
  std::vector<std::vector<std::size_t>> bounds_;
};

}  // namespace

std::size_t greedy_colour_bound(const std::vector<BitVector>& adjacency,
                                const BitVector& candidates) {
  BitVector uncoloured = candidates;
  std::size_t colours = 0;
  while (uncoloured.any()) {
    ++colours;
    BitVector q = uncoloured;
    for (std::size_t v = q.find_first(); v != BitVector::npos; v = q.find_first()) {
      q.reset(v);
      uncoloured.reset(v);
      q.and_not(adjacency[v]);
    }
  }
  return colours;
}

CliqueOutcome max_clique(const std::vector<BitVector>& adjacency, std::uint64_t max_nodes,
                         std::span<const CliqueRoot> roots) {
  CliqueOutcome out;
  const std::size_t n = adjacency.size();
  if (n == 0) {
    out.complete = true;
    return out;
  }
  CliqueSearch search(adjacency, max_nodes);
  std::size_t ceiling = 0;
  if (roots.empty()) {
    const BitVector all(n, true);
    ceiling = greedy_colour_bound(adjacency, all);
    search.seed({0});
    search.run(all);
  } else {
    for (const CliqueRoot& root : roots) {
      ceiling = std::max(ceiling, 1 + greedy_colour_bound(adjacency, root.allowed & adjacency[root.vertex]));
    }
    search.seed({roots.front().vertex});
    for (const CliqueRoot& root : roots) {
      search.run_from(root.vertex, root.allowed);
    }
  }
  out.clique = search.best();
  std::sort(out.clique.begin(), out.clique.end());
  out.nodes = search.nodes();
  out.complete = !search.aborted();
  out.upper_bound = out.complete ? out.clique.size() : std::max(ceiling, out.clique.size());
  return out;
}

}  // namespace isoset
