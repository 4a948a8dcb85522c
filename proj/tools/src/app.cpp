#include "isoset/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "isoset/cli/documents.hpp"
#include "isoset/constructions.hpp"
#include "isoset/intersection.hpp"
#include "isoset/limits.hpp"
#include "isoset/oracle.hpp"
#include "isoset/verify.hpp"

namespace isoset::cli {

namespace {

constexpr const char* kIsolationTable =
    "isolation regimes (1 <= t <= k):\n"
    "  t = 1               singletons, size k\n"
    "  k < 2t              all ones, size 1\n"
    "  2t <= k <= 3t-3     small_k, size 2(k-2t)+3\n"
    "  3t-2 <= k <= 4t-4   big_k, size 2(k-2t)+3\n"
    "  k >= 4t-3           maximal, size k\n";

struct Params {
  std::optional<long long> k, t, a, b, p, q;
};

std::uint32_t require(const std::optional<long long>& value, const char* name) {
  if (!value) {
    throw CLI::RequiredError(std::string("--") + name);
  }
  if (*value < 0 || *value > static_cast<long long>(std::numeric_limits<std::uint32_t>::max())) {
    throw RangeError(std::string("--") + name + " must be a non-negative 32-bit integer, got " +
                     std::to_string(*value));
  }
  return static_cast<std::uint32_t>(*value);
}

void add_params(CLI::App* cmd, Params& params, std::initializer_list<const char*> names) {
  for (const std::string name : names) {
    std::optional<long long>* slot = name == "k"   ? &params.k
                                     : name == "t" ? &params.t
                                     : name == "a" ? &params.a
                                     : name == "b" ? &params.b
                                     : name == "p" ? &params.p
                                                   : &params.q;
    cmd->add_option("--" + name, *slot, name + " parameter");
  }
}

void require_universe(std::uint32_t k, const Limits& limits) {
  if (k > limits.max_universe) {
    throw ResourceError("k=" + std::to_string(k) + " exceeds the universe cap of " +
                        std::to_string(limits.max_universe));
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    throw Error("cannot write " + path);
  }
}

std::string join_one_based(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(xs[i] + 1);
  }
  return s;
}

int print_certificate(const PatternCertificate& cert, std::ostream& out, std::ostream& err) {
  for (const Violation& v : cert.violations()) {
    out << v.row + 1 << ' ' << v.col + 1 << ' ' << v.observed << ' ' << v.expected << '\n';
  }
  for (const SubCheck& c : cert.checks()) {
    if (!c.ok) {
      err << c.label << ": " << c.detail << '\n';
    }
  }
  if (cert.ok()) {
    out << "ok\n";
    return kOk;
  }
  err << cert.violations().size() << (cert.truncated() ? "+" : "") << " violations of the "
      << to_string(cert.pattern()) << " pattern\n";
  return kViolation;
}

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  Params params;
  std::string format = "json";
  std::string out;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_environment();
  std::optional<FamilyPair> family;
  std::optional<BoolMatrix> matrix;
  if (args.kind == "identity" || args.kind == "isolation") {
    const std::uint32_t k = require(args.params.k, "k");
    const std::uint32_t t = require(args.params.t, "t");
    require_universe(k, limits);
    family = args.kind == "identity" ? identity_family(k, t) : isolation_construct(k, t);
  } else if (args.kind == "triangular") {
    family = triangular_construct(require(args.params.a, "a"), require(args.params.b, "b"), limits);
  } else {
    const std::uint32_t p = require(args.params.p, "p");
    const std::uint32_t q = require(args.params.q, "q");
    if (static_cast<std::uint64_t>(p) + q > limits.max_dim) {
      throw ResourceError("circulant order " + std::to_string(std::uint64_t{p} + q) +
                          " exceeds the dimension cap of " + std::to_string(limits.max_dim));
    }
    matrix = circulant_isolation(p, q);
  }

  const bool want_json = args.format != "grid" && family.has_value();
  const bool want_grid = args.format != "json" || !family.has_value();
  const std::string grid = want_grid ? write_matrix(family ? family_to_matrix(*family) : *matrix)
                                     : std::string{};
  if (want_json && want_grid) {
    const std::string json = write_family(*family);
    if (args.out.empty() || args.out == "-") {
      out << json << grid;
    } else {
      write_output(args.out, json, out);
      write_output(args.out + ".grid", grid, out);
    }
  } else {
    write_output(args.out, want_json ? write_family(*family) : grid, out);
  }
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string pattern;
  std::string in;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Document doc = read_document(read_input(args.in));
  const Pattern pattern = args.pattern == "identity"     ? Pattern::identity
                          : args.pattern == "triangular" ? Pattern::triangular
                                                         : Pattern::isolation;
  if (const auto* fp = std::get_if<FamilyPair>(&doc)) {
    switch (pattern) {
      case Pattern::identity:
        return print_certificate(verify_identity(*fp), out, err);
      case Pattern::triangular:
        return print_certificate(verify_triangular(*fp), out, err);
      case Pattern::isolation:
        return print_certificate(verify_isolation(*fp), out, err);
    }
  }
  const auto& m = std::get<BoolMatrix>(doc);
  if (!m.is_square()) {
    throw ParseError("pattern check needs a square matrix, got " + std::to_string(m.n_rows()) +
                     "x" + std::to_string(m.n_cols()));
  }
  switch (pattern) {
    case Pattern::identity:
      return print_certificate(verify_matrix_identity(m), out, err);
    case Pattern::triangular:
      return print_certificate(verify_matrix_triangular(m), out, err);
    case Pattern::isolation:
      break;
  }
  return print_certificate(verify_matrix_isolation(m), out, err);
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  std::string kind;
  Params params;
  std::uint64_t max_nodes = RankBudget{}.max_nodes;
  std::string witness;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_environment();
  RankBudget budget;
  budget.max_nodes = args.max_nodes;
  const std::uint32_t k = require(args.params.k, "k");
  require_universe(k, limits);
  SearchResult result;
  if (args.kind == "triangular") {
    result = max_triangular_bruteforce(require(args.params.a, "a"), require(args.params.b, "b"), k,
                                       budget, limits);
  } else {
    const std::uint32_t t = require(args.params.t, "t");
    result = args.kind == "isolation" ? max_isolation_bruteforce(k, t, budget, limits)
                                      : max_identity_bruteforce(k, t, budget, limits);
  }
  if (result.complete) {
    out << result.optimum << '\n';
  } else {
    out << ">= " << result.lower_bound << '\n';
    out << "upper_bound: " << result.upper_bound << '\n';
  }
  out << "nodes: " << result.nodes_explored << '\n';
  if (!args.witness.empty() && result.witness) {
    write_output(args.witness, write_family(*result.witness), out);
    out << "witness: " << args.witness << '\n';
  }
  return result.complete ? kOk : kIncomplete;
}

// --- rank --------------------------------------------------------------------

struct RankArgs {
  std::string in;
  std::vector<long long> gen_a;
  std::uint64_t max_nodes = RankBudget{}.max_nodes;
  std::uint64_t max_bicliques = RankBudget{}.max_bicliques;
};

int cmd_rank(const RankArgs& args, std::ostream& out, std::ostream& err) {
  const Limits limits = Limits::from_environment();
  BoolMatrix m;
  if (!args.gen_a.empty()) {
    const std::uint32_t k = require(args.gen_a[0], "gen-A K");
    const std::uint32_t t = require(args.gen_a[1], "gen-A T");
    m = build_A(k, t, limits);
  } else if (!args.in.empty()) {
    const Document doc = read_document(read_input(args.in));
    m = std::holds_alternative<FamilyPair>(doc) ? family_to_matrix(std::get<FamilyPair>(doc))
                                                : std::get<BoolMatrix>(doc);
  } else {
    throw CLI::RequiredError("an input path or --gen-A");
  }

  RankBudget budget;
  budget.max_nodes = args.max_nodes;
  budget.max_bicliques = args.max_bicliques;
  const SearchResult result = boolean_rank_exact(m, budget, limits);
  if (result.complete) {
    out << result.optimum << '\n';
  } else {
    out << ">= " << result.lower_bound << '\n';
    out << "<= " << result.upper_bound << '\n';
  }
  out << "nodes: " << result.nodes_explored << '\n';
  for (const Rectangle& r : result.cover) {
    out << "rect rows=" << join_one_based(r.rows) << " cols=" << join_one_based(r.cols) << '\n';
  }

  if (m.is_square() && m == BoolMatrix::identity(m.n_rows())) {
    const auto [x, y] = cover_to_factors(result.cover, m.n_rows(), m.n_cols());
    const PatternCertificate cert = verify_identity_decomposition(x, y);
    out << "decomposition: " << (cert.ok() ? "ok" : "violated") << '\n';
    if (!cert.ok()) {
      print_certificate(cert, out, err);
      return kViolation;
    }
  }
  return result.complete ? kOk : kIncomplete;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
  long long t = 0;
  std::string k_range;
  bool oracle = false;
  std::uint64_t max_nodes = 2'000'000;
};

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ParseError("--k-range must look like LO..HI, got \"" + text + "\"");
  }
  const auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != part.size()) {
      throw ParseError("--k-range must look like LO..HI, got \"" + text + "\"");
    }
    return v;
  };
  return {parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
}

int cmd_table(const TableArgs& args, std::ostream& out) {
  const Limits limits = Limits::from_environment();
  const auto [lo, hi] = parse_range(args.k_range);
  const std::uint32_t t = require(args.t, "t");
  if (t < 1 || lo < t || lo > hi || hi > static_cast<long long>(limits.max_universe)) {
    throw RangeError("table needs 1 <= t <= LO <= HI <= " + std::to_string(limits.max_universe) +
                     ", got t=" + std::to_string(args.t) + ", k-range " + args.k_range);
  }
  RankBudget budget;
  budget.max_nodes = args.max_nodes;
  out << "k size regime" << (args.oracle ? " oracle status" : "") << '\n';
  for (long long kk = lo; kk <= hi; ++kk) {
    const auto k = static_cast<Element>(kk);
    const FamilyPair fp = isolation_construct(k, t);
    out << k << ' ' << fp.size() << ' ' << to_string(isolation_regime(k, t));
    if (args.oracle) {
      try {
        const SearchResult r = max_isolation_bruteforce(k, t, budget, limits);
        if (r.complete) {
          out << ' ' << r.optimum << " complete";
        } else {
          out << ' ' << r.lower_bound << ".." << r.upper_bound << " incomplete";
        }
      } catch (const ResourceError&) {
        out << " - skipped";
      }
    }
    // The construction is not known to be optimal here.
    if (t >= 2 && k >= 2 * t + 2 && k <= 4 * t - 4) {
      out << " open";
    }
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and checks isolation, identity and triangular submatrices of A_{k,t}",
               "isoset"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a family or matrix");
  c->add_option("kind", construct.kind, "identity, isolation, triangular or circulant")
      ->required()
      ->check(CLI::IsMember({"identity", "isolation", "triangular", "circulant"}));
  add_params(c, construct.params, {"k", "t", "a", "b", "p", "q"});
  c->add_option("--format", construct.format,
                "json, grid or both; with --out, both also writes <out>.grid")
      ->check(CLI::IsMember({"json", "grid", "both"}));
  c->add_option("--out", construct.out, "Output path (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a family or matrix document against a pattern");
  v->add_option("pattern", verify.pattern, "identity, triangular or isolation")
      ->required()
      ->check(CLI::IsMember({"identity", "triangular", "isolation"}));
  v->add_option("in", verify.in, "Input path, or - for stdin")->required();

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Exact maximum by exhaustive search");
  s->add_option("kind", search.kind, "isolation, identity or triangular")
      ->required()
      ->check(CLI::IsMember({"isolation", "identity", "triangular"}));
  add_params(s, search.params, {"k", "t", "a", "b"});
  s->add_option("--max-nodes", search.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  s->add_option("--witness", search.witness, "Write the witness family to this path");

  RankArgs rank;
  auto* r = app.add_subcommand("rank", "Exact Boolean rank of a matrix");
  r->add_option("in", rank.in, "Matrix or family document, or - for stdin");
  r->add_option("--gen-A", rank.gen_a, "Use A_{K,T} as input")->expected(2)->type_name("K T");
  r->add_option("--max-nodes", rank.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  r->add_option("--max-bicliques", rank.max_bicliques, "Cap on maximal rectangles")
      ->check(CLI::PositiveNumber);

  TableArgs table;
  auto* tb = app.add_subcommand("table", "Isolation construction sizes over a range of k");
  tb->add_option("--t", table.t, "t parameter")->required();
  tb->add_option("--k-range", table.k_range, "LO..HI")->required();
  tb->add_flag("--oracle", table.oracle, "Also run the exact search where within caps");
  tb->add_option("--max-nodes", table.max_nodes, "Search node budget per row")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (c->parsed()) {
      return cmd_construct(construct, out);
    }
    if (v->parsed()) {
      return cmd_verify(verify, out, err);
    }
    if (s->parsed()) {
      return cmd_search(search, out);
    }
    if (r->parsed()) {
      return cmd_rank(rank, out, err);
    }
    return cmd_table(table, out);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  } catch (const ParseError& e) {
    err << "isoset: " << e.what() << '\n';
    return kParseError;
  } catch (const RangeError& e) {
    err << "isoset: " << e.what() << '\n';
    if (construct.kind == "isolation") {
      err << kIsolationTable;
    }
    return kRangeError;
  } catch (const PreconditionError& e) {
    err << "isoset: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "isoset: " << e.what() << '\n';
    return kRangeError;
  }
}

}  // namespace isoset::cli
