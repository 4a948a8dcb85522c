#include "isoset/verify.hpp"

#include <string>

#include "isoset/errors.hpp"

namespace isoset {

namespace {

bool meets(const Subset& a, const Subset& b) { return a.bits().intersects(b.bits()); }

template <typename Expected>
PatternCertificate check_family(const FamilyPair& fp, Pattern pattern, Expected expected) {
  PatternCertificate cert(pattern);
  const std::size_t n = fp.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool observed = meets(fp.rows()[i], fp.cols()[j]);
      const bool want = expected(i, j);
      if (observed != want) {
        cert.add({i, j, observed ? 1 : 0, want ? 1 : 0});
      }
    }
  }
  return cert;
}

template <typename Expected>
PatternCertificate check_matrix(const BoolMatrix& m, Pattern pattern, Expected expected) {
  if (!m.is_square()) {
    throw InputError("pattern check needs a square matrix, got " + std::to_string(m.n_rows()) +
                     "x" + std::to_string(m.n_cols()));
  }
  PatternCertificate cert(pattern);
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      const bool observed = m.get(i, j);
      const bool want = expected(i, j);
      if (observed != want) {
        cert.add({i, j, observed ? 1 : 0, want ? 1 : 0});
      }
    }
  }
  return cert;
}

}  // namespace

PatternCertificate verify_isolation(const FamilyPair& fp) {
  PatternCertificate cert(Pattern::isolation);
  const auto& rows = fp.rows();
  const auto& cols = fp.cols();
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (!meets(rows[i], cols[i])) {
      cert.add({i, i, 0, 1});
    }
  }
  for (std::size_t i = 0; i < fp.size(); ++i) {
    for (std::size_t j = i + 1; j < fp.size(); ++j) {
      if (meets(rows[i], cols[j]) && meets(rows[j], cols[i])) {
        cert.add({i, j, 1, 0});
      }
    }
  }
  return cert;
}

PatternCertificate verify_identity(const FamilyPair& fp) {
  return check_family(fp, Pattern::identity, [](std::size_t i, std::size_t j) { return i == j; });
}

PatternCertificate verify_triangular(const FamilyPair& fp) {
  return check_family(fp, Pattern::triangular, [](std::size_t i, std::size_t j) { return i >= j; });
}

PatternCertificate verify_matrix_isolation(const BoolMatrix& m) {
  if (!m.is_square()) {
    throw InputError("isolation check needs a square matrix, got " + std::to_string(m.n_rows()) +
                     "x" + std::to_string(m.n_cols()));
  }
  PatternCertificate cert(Pattern::isolation);
  const std::size_t n = m.n_rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.get(i, i)) {
      cert.add({i, i, 0, 1});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.get(i, j) && m.get(j, i)) {
        cert.add({i, j, 1, 0});
      }
    }
  }
  return cert;
}

PatternCertificate verify_matrix_identity(const BoolMatrix& m) {
  return check_matrix(m, Pattern::identity, [](std::size_t i, std::size_t j) { return i == j; });
}

PatternCertificate verify_matrix_triangular(const BoolMatrix& m) {
  return check_matrix(m, Pattern::triangular, [](std::size_t i, std::size_t j) { return i >= j; });
}

PatternCertificate verify_identity_decomposition(const BoolMatrix& x, const BoolMatrix& y) {
  const std::size_t n = x.n_rows();
  const std::size_t r = x.n_cols();
  if (y.n_rows() != r || y.n_cols() != n) {
    throw InputError("decomposition shapes " + std::to_string(n) + "x" + std::to_string(r) +
                     " and " + std::to_string(y.n_rows()) + "x" + std::to_string(y.n_cols()) +
                     " do not multiply to a square matrix");
  }
  const BoolMatrix product = boolean_product(x, y);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (product.get(i, j) != (i == j)) {
        throw PreconditionError("X*Y is not the identity: entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") is " +
                                (product.get(i, j) ? "1" : "0"));
      }
    }
  }

  PatternCertificate cert(Pattern::identity);
  std::vector<bool> covered(n, false);
  std::size_t bad_terms = 0;
  for (std::size_t term = 0; term < r; ++term) {
    const BitVector col = x.column(term);
    const BitVector& row = y.row(term);
    if (col.none() || row.none()) {
      continue;
    }
    if (col.count() == 1 && col == row) {
      covered[col.find_first()] = true;
      continue;
    }
    ++bad_terms;
    cert.add({term, term, static_cast<std::int64_t>(col.count() * row.count()), 1});
  }
  cert.add_check({"rank_one_terms", bad_terms == 0,
                  std::to_string(bad_terms) + " terms are neither e_j (x) e_j nor zero"});

  std::size_t missing = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!covered[j]) {
      ++missing;
      cert.add({j, j, 0, 1});
    }
  }
  cert.add_check({"covers_diagonal", missing == 0,
                  std::to_string(missing) + " basis vectors without a matching term"});

  const std::size_t ones = x.count_ones() + y.count_ones();
  const std::size_t bound = 2 * n + (r > n ? (r - n) * n : 0);
  const bool count_ok = r >= n && ones <= bound;
  if (!count_ok) {
    cert.add({0, 0, static_cast<std::int64_t>(ones), static_cast<std::int64_t>(bound)});
  }
  cert.add_check({"ones_count", count_ok,
                  "ones=" + std::to_string(ones) + " bound=" + std::to_string(bound)});
  return cert;
}

}  // namespace isoset
