#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "isoset/bool_matrix.hpp"
#include "isoset/family.hpp"
#include "isoset/limits.hpp"

namespace isoset {

/// Hands out fresh universe elements 1, 2, 3, ... in increasing order.
/// Single-owner mutable state.
class ElementAllocator {
 public:
  /// `cap` is the largest element that may be issued.
  explicit ElementAllocator(std::uint64_t cap = Limits{}.max_universe) : cap_(cap) {}

  /// Throws ResourceError once the cap would be exceeded.
  Element allocate();
  std::vector<Element> allocate(std::size_t n);

  [[nodiscard]] Element next_free() const noexcept { return next_free_; }
  [[nodiscard]] std::uint64_t issued() const noexcept { return next_free_ - 1; }

 private:
  std::uint64_t cap_;
  Element next_free_ = 1;
};

// --- identity ---------------------------------------------------------------

/// Identity submatrix of A_{k,t} of size s = k-2t+2: rows {1..t-1} + {i},
/// columns {t..2t-2} + {i}, for i = 2t-1..k. RangeError unless t >= 1, k >= 2t.
[[nodiscard]] FamilyPair identity_family(Element k, Element t);

// --- isolation --------------------------------------------------------------

struct CirculantOptions {
  /// Allow q < p-1, where the result is no longer guaranteed to be an isolation matrix.
  bool allow_non_isolating = false;
};

/// Circulant F_{p,q} of order p+q: F[i][j] = 1 iff (i-j) mod (p+q) < p.
/// Every column holds p ones followed cyclically by q zeros.
[[nodiscard]] BoolMatrix circulant_isolation(std::uint32_t p, std::uint32_t q,
                                             CirculantOptions options = {});

/// Isolation family of size k-t+1 for k >= 3t-2 whose matrix is F_{t, k-2t+1}.
[[nodiscard]] FamilyPair isolation_3t2(Element k, Element t);

/// Size 2r+3 for k = 2t+r, 0 <= r <= t-3: the k' = 3r+4, t' = r+2 family padded
/// with disjoint row-only and column-only elements.
[[nodiscard]] FamilyPair isolation_small_k(Element k, Element t);

/// Size 2r+3 for k = 2t+r, t-2 <= r <= 2t-3.
[[nodiscard]] FamilyPair isolation_big_k(Element k, Element t);

/// Size k for k >= 4t-3: the k' = 4t-3 family plus k-k' appended diagonal pairs.
[[nodiscard]] FamilyPair isolation_maximal(Element k, Element t);

/// Which construction isolation_construct uses for (k, t).
enum class IsolationRegime { singletons, all_ones, small_k, big_k, maximal };

[[nodiscard]] std::string_view to_string(IsolationRegime r) noexcept;
[[nodiscard]] IsolationRegime isolation_regime(Element k, Element t);
/// Size the constructions guarantee: k for t = 1, 1 for k < 2t, 2r+3 for
/// 2t <= k <= 4t-3 and k beyond.
[[nodiscard]] std::uint64_t isolation_size(Element k, Element t);

/// Dispatches to the regime covering (k, t). Requires k, t >= 1.
[[nodiscard]] FamilyPair isolation_construct(Element k, Element t);

// --- triangular -------------------------------------------------------------

/// Triangular family (rows[i] meets cols[j] iff i >= j) of size C(a+b, a) - 1 whose
/// rows have a elements and columns b. Elements come from `alloc`; the result's
/// universe is everything issued by `alloc` so far.
[[nodiscard]] FamilyPair triangular_family(std::uint32_t a, std::uint32_t b, ElementAllocator& alloc);

/// triangular_family on a fresh allocator, compacted. The element count consumed
/// before compaction is recorded as meta param "raw_universe".
[[nodiscard]] FamilyPair triangular_construct(std::uint32_t a, std::uint32_t b,
                                              const Limits& limits = {});

/// Relabels the used elements to 1..u preserving order; the realized matrix is unchanged.
[[nodiscard]] FamilyPair compact_universe(const FamilyPair& fp);

}  // namespace isoset
