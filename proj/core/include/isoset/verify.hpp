#pragma once

#include "isoset/bool_matrix.hpp"
#include "isoset/certificate.hpp"
#include "isoset/family.hpp"

namespace isoset {

// Family checks work on the subsets directly, matrix checks on the bits; the two
// routes are kept independent so each can cross-check the other.

/// Diagonal pairs intersect and, for i != j, rows[i]/cols[j] or rows[j]/cols[i] is disjoint.
/// A failing off-diagonal pair is reported once, as (i, j, 1, 0) with i < j.
[[nodiscard]] PatternCertificate verify_isolation(const FamilyPair& fp);
/// rows[i] meets cols[j] iff i == j.
[[nodiscard]] PatternCertificate verify_identity(const FamilyPair& fp);
/// rows[i] meets cols[j] iff i >= j.
[[nodiscard]] PatternCertificate verify_triangular(const FamilyPair& fp);

/// Throws InputError when M is not square.
[[nodiscard]] PatternCertificate verify_matrix_isolation(const BoolMatrix& m);
[[nodiscard]] PatternCertificate verify_matrix_identity(const BoolMatrix& m);
[[nodiscard]] PatternCertificate verify_matrix_triangular(const BoolMatrix& m);

/// Structure of a Boolean factorization X Y = I_n (X is n x r, Y is r x n):
///  - "rank_one_terms": each column x_i of X and row y_i of Y are the same basis
///    vector e_j, or one of them is zero;
///  - "covers_diagonal": every e_j appears as such a term;
///  - "ones_count": ones(X) + ones(Y) <= 2n + (r-n)n.
/// Throws PreconditionError naming the first wrong entry when X Y != I_n.
[[nodiscard]] PatternCertificate verify_identity_decomposition(const BoolMatrix& x,
                                                               const BoolMatrix& y);

}  // namespace isoset
