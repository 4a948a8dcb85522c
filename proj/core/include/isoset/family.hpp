#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isoset/subset.hpp"

namespace isoset {

/// Construction name plus the integer parameters it was called with, in call order.
struct ConstructionMeta {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> params;

  [[nodiscard]] std::optional<std::int64_t> param(std::string_view key) const;
  void set_param(std::string key, std::int64_t value);

  friend bool operator==(const ConstructionMeta&, const ConstructionMeta&) = default;
};

/// Row and column index families of a square submatrix of an intersection matrix.
///
/// Invariants (checked on construction, InputError otherwise):
///  - rows.size() == cols.size()
///  - every row has cardinality row_size, every column col_size
///  - every subset lives in the universe [1, universe]
class FamilyPair {
 public:
  FamilyPair() = default;
  FamilyPair(Element universe, std::size_t row_size, std::size_t col_size, std::vector<Subset> rows,
             std::vector<Subset> cols, ConstructionMeta meta = {});

  [[nodiscard]] Element universe() const noexcept { return universe_; }
  [[nodiscard]] std::size_t row_size() const noexcept { return row_size_; }
  [[nodiscard]] std::size_t col_size() const noexcept { return col_size_; }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<Subset>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<Subset>& cols() const noexcept { return cols_; }
  [[nodiscard]] const ConstructionMeta& meta() const noexcept { return meta_; }

  /// Copy with replaced metadata.
  [[nodiscard]] FamilyPair with_meta(ConstructionMeta meta) const;

  friend bool operator==(const FamilyPair&, const FamilyPair&) = default;

 private:
  Element universe_ = 0;
  std::size_t row_size_ = 0;
  std::size_t col_size_ = 0;
  std::vector<Subset> rows_;
  std::vector<Subset> cols_;
  ConstructionMeta meta_;
};

/// Builds the subsets from element lists over [1, universe].
[[nodiscard]] std::vector<Subset> make_subsets(Element universe,
                                               const std::vector<std::vector<Element>>& lists);

}  // namespace isoset
