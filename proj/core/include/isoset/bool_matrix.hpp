#pragma once

#include <cstddef>
#include <vector>

#include "isoset/bit_vector.hpp"

namespace isoset {

/// Dense 0/1 matrix with bit-packed rows. Indices are 0-based.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t n_rows, std::size_t n_cols);
  /// Every row must have the same length; throws InputError otherwise.
  explicit BoolMatrix(std::vector<BitVector> rows);

  [[nodiscard]] static BoolMatrix identity(std::size_t n);
  [[nodiscard]] static BoolMatrix all_ones(std::size_t n_rows, std::size_t n_cols);

  [[nodiscard]] std::size_t n_rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t n_cols() const noexcept { return n_cols_; }
  [[nodiscard]] bool is_square() const noexcept { return n_rows() == n_cols_; }

  [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept { rows_[i].assign(j, value); }

  [[nodiscard]] const BitVector& row(std::size_t i) const noexcept { return rows_[i]; }
  [[nodiscard]] const std::vector<BitVector>& rows() const noexcept { return rows_; }
  [[nodiscard]] BitVector column(std::size_t j) const;

  [[nodiscard]] std::size_t count_ones() const noexcept;
  [[nodiscard]] BoolMatrix transpose() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Product over the Boolean semiring. Throws InputError on inner-dimension mismatch.
[[nodiscard]] BoolMatrix boolean_product(const BoolMatrix& x, const BoolMatrix& y);

}  // namespace isoset
