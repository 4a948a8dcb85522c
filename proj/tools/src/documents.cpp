#include "isoset/cli/documents.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace isoset::cli {

namespace {

using Json = nlohmann::ordered_json;

Json subsets_to_json(const std::vector<Subset>& sets) {
  Json out = Json::array();
  for (const Subset& s : sets) {
    out.push_back(s.elements());
  }
  return out;
}

const Json& field(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("family document lacks \"") + key + "\"");
  }
  return *it;
}

std::uint64_t positive(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 ||
      v.get<std::uint64_t>() > std::numeric_limits<Element>::max()) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::vector<Element>> element_lists(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array of arrays");
  }
  std::vector<std::vector<Element>> out;
  for (const Json& set : v) {
    if (!set.is_array()) {
      throw ParseError(std::string("\"") + key + "\" must be an array of arrays");
    }
    std::vector<Element> elems;
    for (const Json& e : set) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() > std::numeric_limits<Element>::max()) {
        throw ParseError(std::string("\"") + key + "\" holds a non-element value " + e.dump());
      }
      elems.push_back(e.get<Element>());
    }
    if (!std::is_sorted(elems.begin(), elems.end()) ||
        std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
      throw ParseError(std::string("\"") + key + "\" holds an unsorted or repeated set " +
                       set.dump());
    }
    out.push_back(std::move(elems));
  }
  return out;
}

}  // namespace

std::string write_family(const FamilyPair& fp) {
  Json params = Json::object();
  for (const auto& [key, value] : fp.meta().params) {
    params[key] = value;
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["meta"] = {{"construction", fp.meta().name}, {"params", params}};
  doc["universe"] = fp.universe();
  doc["row_size"] = fp.row_size();
  doc["col_size"] = fp.col_size();
  doc["rows"] = subsets_to_json(fp.rows());
  doc["cols"] = subsets_to_json(fp.cols());
  return doc.dump(2) + "\n";
}

FamilyPair read_family(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("family document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("family document must be a JSON object");
  }
  const Json& version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kSchemaVersion) {
    throw ParseError("unsupported schema_version " + version.dump());
  }
  ConstructionMeta meta;
  if (const auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) {
      throw ParseError("\"meta\" must be an object");
    }
    if (const auto name = it->find("construction"); name != it->end()) {
      if (!name->is_string()) {
        throw ParseError("\"meta.construction\" must be a string");
      }
      meta.name = name->get<std::string>();
    }
    if (const auto params = it->find("params"); params != it->end()) {
      if (!params->is_object()) {
        throw ParseError("\"meta.params\" must be an object");
      }
      for (const auto& [key, value] : params->items()) {
        if (!value.is_number_integer()) {
          throw ParseError("\"meta.params." + key + "\" must be an integer");
        }
        meta.params.emplace_back(key, value.get<std::int64_t>());
      }
    }
  }
  const auto universe = static_cast<Element>(positive(doc, "universe"));
  const auto row_size = static_cast<std::size_t>(positive(doc, "row_size"));
  const auto col_size = static_cast<std::size_t>(positive(doc, "col_size"));
  try {
    return FamilyPair(universe, row_size, col_size,
                      make_subsets(universe, element_lists(doc, "rows")),
                      make_subsets(universe, element_lists(doc, "cols")), std::move(meta));
  } catch (const InputError& e) {
    throw ParseError(std::string("invalid family document: ") + e.what());
  }
}

std::string write_matrix(const BoolMatrix& m) {
  std::string out = std::to_string(m.n_rows()) + " " + std::to_string(m.n_cols()) + "\n";
  out.reserve(out.size() + m.n_rows() * (m.n_cols() + 1));
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      out.push_back(m.get(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

BoolMatrix read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) {
    throw ParseError("matrix document is empty");
  }
  std::istringstream dims(header);
  long long n_rows = -1;
  long long n_cols = -1;
  std::string rest;
  if (!(dims >> n_rows >> n_cols) || (dims >> rest) || n_rows < 0 || n_cols < 0) {
    throw ParseError("matrix header must be \"n_rows n_cols\", got \"" + header + "\"");
  }
  // Each row needs at least n_cols characters, so oversized headers fail fast.
  const auto budget = static_cast<long long>(text.size());
  if (n_cols > budget || n_rows > budget / std::max(n_cols, 1LL)) {
    throw ParseError("matrix document is too short for a " + std::to_string(n_rows) + "x" +
                     std::to_string(n_cols) + " matrix");
  }
  BoolMatrix m(static_cast<std::size_t>(n_rows), static_cast<std::size_t>(n_cols));
  std::string line;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("matrix document ends after " + std::to_string(i) + " of " +
                       std::to_string(n_rows) + " rows");
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.size() != m.n_cols()) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(line.size()) + " characters, expected " +
                       std::to_string(n_cols));
    }
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] != '0' && line[j] != '1') {
        throw ParseError("matrix row " + std::to_string(i + 1) + " holds '" +
                         std::string(1, line[j]) + "'");
      }
      m.set(i, j, line[j] == '1');
    }
  }
  while (std::getline(in, line)) {
    if (!std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      throw ParseError("matrix document has content after its last row");
    }
  }
  return m;
}

Document read_document(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') {
    return read_family(text);
  }
  return read_matrix(text);
}

}  // namespace isoset::cli
