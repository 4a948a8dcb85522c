#include "isoset/family.hpp"

#include <algorithm>
#include <string>

#include "isoset/errors.hpp"

namespace isoset {

std::optional<std::int64_t> ConstructionMeta::param(std::string_view key) const {
  const auto it = std::find_if(params.begin(), params.end(),
                               [&](const auto& kv) { return kv.first == key; });
  if (it == params.end()) {
    return std::nullopt;
  }
  return it->second;
}

void ConstructionMeta::set_param(std::string key, std::int64_t value) {
  const auto it = std::find_if(params.begin(), params.end(),
                               [&](const auto& kv) { return kv.first == key; });
  if (it == params.end()) {
    params.emplace_back(std::move(key), value);
  } else {
    it->second = value;
  }
}

namespace {

void check_side(const std::vector<Subset>& side, const char* name, Element universe,
                std::size_t expected) {
  for (std::size_t i = 0; i < side.size(); ++i) {
    const Subset& s = side[i];
    if (s.universe() != universe) {
      throw InputError(std::string(name) + " " + std::to_string(i + 1) + " has universe " +
                       std::to_string(s.universe()) + ", expected " + std::to_string(universe));
    }
    if (s.cardinality() != expected) {
      throw InputError(std::string(name) + " " + std::to_string(i + 1) + " has cardinality " +
                       std::to_string(s.cardinality()) + ", expected " + std::to_string(expected));
    }
  }
}

}  // namespace

FamilyPair::FamilyPair(Element universe, std::size_t row_size, std::size_t col_size,
                       std::vector<Subset> rows, std::vector<Subset> cols, ConstructionMeta meta)
    : universe_(universe),
      row_size_(row_size),
      col_size_(col_size),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      meta_(std::move(meta)) {
  if (universe_ == 0) {
    throw InputError("family universe must be positive");
  }
  if (row_size_ == 0 || col_size_ == 0) {
    throw InputError("family element sizes must be positive");
  }
  if (rows_.size() != cols_.size()) {
    throw InputError("family is not square: " + std::to_string(rows_.size()) + " rows, " +
                     std::to_string(cols_.size()) + " columns");
  }
  check_side(rows_, "row", universe_, row_size_);
  check_side(cols_, "column", universe_, col_size_);
}

FamilyPair FamilyPair::with_meta(ConstructionMeta meta) const {
  FamilyPair out = *this;
  out.meta_ = std::move(meta);
  return out;
}

std::vector<Subset> make_subsets(Element universe, const std::vector<std::vector<Element>>& lists) {
  std::vector<Subset> out;
  out.reserve(lists.size());
  for (const auto& l : lists) {
    out.emplace_back(universe, std::span<const Element>(l));
  }
  return out;
}

}  // namespace isoset
