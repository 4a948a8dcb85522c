#include "isoset/bool_matrix.hpp"

#include <string>
#include <utility>

#include "isoset/errors.hpp"

namespace isoset {

BoolMatrix::BoolMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_cols_(n_cols), rows_(n_rows, BitVector(n_cols)) {}

BoolMatrix::BoolMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  n_cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const BitVector& r : rows_) {
    if (r.size() != n_cols_) {
      throw InputError("ragged matrix rows: expected length " + std::to_string(n_cols_) + ", got " +
                       std::to_string(r.size()));
    }
  }
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BoolMatrix BoolMatrix::all_ones(std::size_t n_rows, std::size_t n_cols) {
  BoolMatrix m;
  m.n_cols_ = n_cols;
  m.rows_.assign(n_rows, BitVector(n_cols, true));
  return m;
}

BitVector BoolMatrix::column(std::size_t j) const {
  BitVector col(n_rows());
  for (std::size_t i = 0; i < n_rows(); ++i) {
    col.assign(i, get(i, j));
  }
  return col;
}

std::size_t BoolMatrix::count_ones() const noexcept {
  std::size_t n = 0;
  for (const BitVector& r : rows_) {
    n += r.count();
  }
  return n;
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(n_cols_, n_rows());
  for (std::size_t i = 0; i < n_rows(); ++i) {
    rows_[i].for_each_set([&](std::size_t j) { t.set(j, i); });
  }
  return t;
}

BoolMatrix boolean_product(const BoolMatrix& x, const BoolMatrix& y) {
  if (x.n_cols() != y.n_rows()) {
    throw InputError("boolean product dimension mismatch: " + std::to_string(x.n_cols()) + " vs " +
                     std::to_string(y.n_rows()));
  }
  if (x.n_rows() == 0) {
    return BoolMatrix(0, y.n_cols());
  }
  std::vector<BitVector> rows(x.n_rows(), BitVector(y.n_cols()));
  for (std::size_t i = 0; i < x.n_rows(); ++i) {
    x.row(i).for_each_set([&](std::size_t l) { rows[i] |= y.row(l); });
  }
  return BoolMatrix(std::move(rows));
}

}  // namespace isoset
