#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "isoset/bool_matrix.hpp"
#include "isoset/errors.hpp"
#include "isoset/family.hpp"

namespace isoset::cli {

/// Malformed FamilyDocument or MatrixDocument.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

/// FamilyDocument: one JSON object with schema_version, meta {construction, params},
/// universe, row_size, col_size, rows and cols (sorted, 1-based element arrays).
[[nodiscard]] std::string write_family(const FamilyPair& fp);
[[nodiscard]] FamilyPair read_family(std::string_view text);

/// MatrixDocument: "n_rows n_cols", then one line of '0'/'1' per row, row 1 first.
[[nodiscard]] std::string write_matrix(const BoolMatrix& m);
[[nodiscard]] BoolMatrix read_matrix(std::string_view text);

using Document = std::variant<FamilyPair, BoolMatrix>;

/// A leading '{' selects the family format, anything else the matrix format.
[[nodiscard]] Document read_document(std::string_view text);

}  // namespace isoset::cli
