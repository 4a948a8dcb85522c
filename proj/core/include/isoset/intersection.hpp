#pragma once

#include <cstddef>
#include <vector>

#include "isoset/bool_matrix.hpp"
#include "isoset/family.hpp"
#include "isoset/limits.hpp"
#include "isoset/subset.hpp"

namespace isoset {

/// M[i][j] = 1 iff rows[i] and cols[j] intersect.
[[nodiscard]] BoolMatrix family_to_matrix(const FamilyPair& fp);

/// All t-subsets of [k] in colexicographic order. RangeError unless 1 <= t <= k.
[[nodiscard]] std::vector<Subset> enumerate_t_subsets(Element k, Element t);

/// The uniform intersection matrix A_{k,t} over enumerate_t_subsets(k, t).
/// ResourceError when (k choose t) exceeds limits.max_dim.
[[nodiscard]] BoolMatrix build_A(Element k, Element t, const Limits& limits = {});

}  // namespace isoset
