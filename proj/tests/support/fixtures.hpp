#pragma once

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoset/bool_matrix.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open fixture " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(ISOSET_GOLDEN_DIR) + "/" + name);
}

/// Matrix from rows of '0'/'1' characters.
inline isoset::BoolMatrix matrix(const std::vector<std::string>& rows) {
  isoset::BoolMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m.set(i, j, rows[i][j] == '1');
    }
  }
  return m;
}

}  // namespace fixtures
