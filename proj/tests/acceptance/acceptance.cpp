// Acceptance suite: one PASS/FAIL line per criterion on stdout, timings on
// stderr so that stdout is byte-identical across runs.
//
//   acceptance [--long]
//
// --long adds the k=7, t=3 isolation search.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "isoset/cli/app.hpp"
#include "isoset/cli/documents.hpp"
#include "isoset/constructions.hpp"
#include "isoset/intersection.hpp"
#include "isoset/limits.hpp"
#include "isoset/oracle.hpp"
#include "isoset/verify.hpp"

namespace {

using namespace isoset;

/// Collects failures and a transcript of every computed value, node counts included.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      failures_.push_back(what);
    }
  }
  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    std::ostringstream line;
    line << what << " = " << got;
    log(line.str());
    if (!(got == want)) {
      std::ostringstream msg;
      msg << what << ": got " << got << ", want " << want;
      failures_.push_back(msg.str());
    }
  }
  void log(const std::string& line) { transcript_ += line + "\n"; }

  [[nodiscard]] bool ok() const { return failures_.empty(); }
  [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }
  [[nodiscard]] const std::string& transcript() const { return transcript_; }

 private:
  std::vector<std::string> failures_;
  std::string transcript_;
};

std::string cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

void log_search(Check& c, const std::string& label, const SearchResult& r) {
  c.log(label + " optimum=" + std::to_string(r.optimum) + " nodes=" +
        std::to_string(r.nodes_explored) + " complete=" + (r.complete ? "1" : "0"));
}

// 1. Figures reproduced bit-exactly through the CLI.
void figures(Check& c) {
  int code = 0;
  const std::string f1 = cli({"construct", "circulant", "--p", "5", "--q", "4", "--format", "grid"}, code);
  c.expect(code == 0 && f1 == fixtures::golden("figure1.grid"), "figure 1 grid");
  const std::string f2 = cli({"construct", "isolation", "--k", "12", "--t", "4", "--format", "grid"}, code);
  c.expect(code == 0 && f2 == fixtures::golden("figure2.grid"), "figure 2 grid");
  const std::string f3 = cli({"construct", "isolation", "--k", "11", "--t", "3", "--format", "grid"}, code);
  c.expect(code == 0 && f3 == fixtures::golden("figure3.grid"), "figure 3 grid");

  for (const auto& [k, t, name] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"12", "4", "figure2.json"}, {"11", "3", "figure3.json"}}) {
    const FamilyPair got = cli::read_family(cli({"construct", "isolation", "--k", k, "--t", t}, code));
    const FamilyPair want = cli::read_family(fixtures::golden(name));
    c.expect(got.rows() == want.rows() && got.cols() == want.cols(), name + " index lists");
  }
  c.log(f1 + f2 + f3);
}

// 2. Largest identity submatrix has size k-2t+2.
void identity(Check& c) {
  for (const auto& [k, t] :
       std::vector<std::pair<Element, Element>>{{4, 2}, {5, 2}, {6, 2}, {7, 2}, {6, 3}, {7, 3}}) {
    const SearchResult r = max_identity_bruteforce(k, t);
    const std::string label = "identity oracle (" + std::to_string(k) + "," + std::to_string(t) + ")";
    log_search(c, label, r);
    c.expect(r.complete, label + " complete");
    c.expect_eq<std::uint64_t>(r.optimum, k - 2 * t + 2, label);
  }
  for (Element t = 1; t <= 6; ++t) {
    for (Element k = 2 * t; k <= 2 * t + 14; ++k) {
      const FamilyPair fp = identity_family(k, t);
      const std::string label = "identity_family(" + std::to_string(k) + "," + std::to_string(t) + ")";
      c.expect(verify_identity(fp).ok(), label + " verifies");
      c.expect(fp.size() == k - 2 * t + 2, label + " size");
    }
  }
}

// 3. Isolation construction sizes across regimes.
void isolation_sizes(Check& c) {
  for (Element t = 2; t <= 8; ++t) {
    for (Element k = 2 * t; k <= 4 * t + 10; ++k) {
      const FamilyPair fp = isolation_construct(k, t);
      const std::uint64_t want = k <= 4 * t - 3 ? 2 * (k - 2 * t) + 3 : k;
      const std::string label = "isolation(" + std::to_string(k) + "," + std::to_string(t) + ")";
      c.expect(verify_isolation(fp).ok(), label + " verifies");
      c.expect(fp.size() == want, label + " size");
    }
  }
  int code = 0;
  const std::string table = cli({"table", "--t", "2", "--k-range", "4..9"}, code);
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  std::string sizes;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string k;
    std::string size;
    fields >> k >> size;
    sizes += (sizes.empty() ? "" : ",") + size;
  }
  c.expect_eq<std::string>(sizes, "3,5,6,7,8,9", "t=2 table");
}

// 4. Tightness at k = 2t+1 and k = 2t.
void isolation_oracle(Check& c) {
  const SearchResult r52 = max_isolation_bruteforce(5, 2);
  log_search(c, "isolation oracle (5,2)", r52);
  c.expect(r52.complete, "isolation oracle (5,2) complete");
  c.expect_eq<std::uint64_t>(r52.optimum, 5, "isolation oracle (5,2)");
  c.expect(r52.witness && verify_isolation(*r52.witness).ok(), "isolation (5,2) witness");
  const SearchResult r42 = max_isolation_bruteforce(4, 2);
  log_search(c, "isolation oracle (4,2)", r42);
  c.expect(r42.complete, "isolation oracle (4,2) complete");
  c.expect_eq<std::uint64_t>(r42.optimum, 3, "isolation oracle (4,2)");
}

// 5. Triangular families.
void triangular(Check& c) {
  const SearchResult r = max_triangular_bruteforce(2, 2, 8);
  log_search(c, "triangular oracle (2,2,8)", r);
  c.expect(r.complete, "triangular oracle complete");
  c.expect_eq<std::uint64_t>(r.optimum, 5, "triangular oracle (2,2,8)");
  c.expect(r.witness && verify_triangular(*r.witness).ok(), "triangular witness");
  for (std::uint32_t a = 1; a <= 4; ++a) {
    for (std::uint32_t b = 1; b <= 4; ++b) {
      const FamilyPair fp = triangular_construct(a, b);
      const std::string label = "triangular(" + std::to_string(a) + "," + std::to_string(b) + ")";
      c.expect_eq<std::uint64_t>(fp.size(), binomial(a + b, a) - 1, label + " size");
      c.expect(verify_triangular(fp).ok(), label + " verifies");
    }
  }
  for (std::uint32_t n = 1; n <= 6; ++n) {
    c.expect_eq<std::uint64_t>(triangular_construct(n, 1).size(), n, "triangular base (a,1)");
    c.expect_eq<std::uint64_t>(triangular_construct(1, n).size(), n, "triangular base (1,b)");
  }
}

// 6. Boolean rank.
void rank(Check& c) {
  const auto exact = [&](const BoolMatrix& m, std::uint64_t want, const std::string& label) {
    const SearchResult r = boolean_rank_exact(m);
    log_search(c, label, r);
    c.expect(r.complete, label + " complete");
    c.expect_eq<std::uint64_t>(r.optimum, want, label);
    c.expect(is_exact_cover(m, r.cover), label + " cover is exact");
    return r;
  };
  exact(build_A(4, 2), 4, "rank A(4,2)");
  exact(build_A(5, 2), 5, "rank A(5,2)");
  exact(circulant_isolation(5, 4), 9, "rank F(5,4)");
  for (std::size_t n = 1; n <= 6; ++n) {
    const SearchResult r = exact(BoolMatrix::identity(n), n, "rank I_" + std::to_string(n));
    const auto [x, y] = cover_to_factors(r.cover, n, n);
    const PatternCertificate cert = verify_identity_decomposition(x, y);
    c.expect(cert.ok(), "I_" + std::to_string(n) + " decomposition");
    const std::size_t r_dim = r.cover.size();
    c.expect(x.count_ones() + y.count_ones() <= 2 * n + (r_dim - n) * n,
             "I_" + std::to_string(n) + " ones count");
  }
}

// 7. Family and matrix views agree; the 3t-2 family realizes the circulant.
void cross_view(Check& c) {
  gen::Gen g(gen::kSeed);
  std::size_t agree = 0;
  std::size_t ok_families = 0;
  for (int i = 0; i < 200; ++i) {
    const FamilyPair fp = g.family();
    const bool family_ok = verify_isolation(fp).ok();
    agree += family_ok == verify_matrix_isolation(family_to_matrix(fp)).ok() ? 1 : 0;
    ok_families += family_ok ? 1 : 0;
  }
  c.expect_eq<std::size_t>(agree, 200, "views agree");
  c.log("isolation families among generated: " + std::to_string(ok_families));
  for (Element t = 1; t <= 6; ++t) {
    for (Element k = 3 * t - 2; k <= 3 * t + 6; ++k) {
      c.expect(family_to_matrix(isolation_3t2(k, t)) == circulant_isolation(t, k - 2 * t + 1),
               "3t-2 family (" + std::to_string(k) + "," + std::to_string(t) + ") is circulant");
    }
  }
}

void long_isolation(Check& c) {
  const SearchResult r = max_isolation_bruteforce(7, 3);
  log_search(c, "isolation oracle (7,3)", r);
  c.expect(r.complete, "isolation oracle (7,3) complete");
  c.expect_eq<std::uint64_t>(r.optimum, 5, "isolation oracle (7,3)");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool long_mode = argc > 1 && std::string(argv[1]) == "--long";
  std::vector<Criterion> criteria{
      {1, "figure reproduction", 1.0, figures},
      {2, "identity submatrix size k-2t+2", 30.0, identity},
      {3, "isolation construction sizes", 10.0, isolation_sizes},
      {4, "isolation oracle at k=2t and k=2t+1", 300.0, isolation_oracle},
      {5, "triangular families", 300.0, triangular},
      {6, "boolean rank", 600.0, rank},
      {7, "cross-view consistency", 60.0, cross_view},
  };
  if (long_mode) {
    criteria.push_back({9, "isolation oracle (7,3), opt-in", 3600.0, long_isolation});
  }

  using Clock = std::chrono::steady_clock;
  bool all_ok = true;
  std::string transcript;
  const auto report = [&](int id, const char* name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
    if (!detail.empty()) {
      std::cout << " (" << detail << ")";
    }
    std::cout << '\n';
    all_ok = all_ok && ok;
  };

  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::cerr << "criterion " << cr.id << " took " << seconds << " s (limit " << cr.limit_seconds
              << " s)\n";
    const bool in_time = seconds < cr.limit_seconds;
    std::string detail = check.ok() ? "" : check.failures().front();
    if (!in_time) {
      detail = "over the " + std::to_string(cr.limit_seconds) + " s limit";
    }
    report(cr.id, cr.name, check.ok() && in_time, detail);
    for (std::size_t i = 1; i < check.failures().size() && i < 10; ++i) {
      std::cout << "      " << check.failures()[i] << '\n';
    }
    transcript += check.transcript();
  }

  // 8. A second pass must reproduce the transcript, node counts included.
  std::string again;
  for (const Criterion& cr : criteria) {
    Check check;
    try {
      cr.run(check);
    } catch (const std::exception&) {
    }
    again += check.transcript();
  }
  std::size_t nodes_lines = 0;
  for (std::size_t pos = transcript.find("nodes="); pos != std::string::npos;
       pos = transcript.find("nodes=", pos + 1)) {
    ++nodes_lines;
  }
  report(8, "determinism", again == transcript,
         again == transcript ? "" : "second pass differs from the first");
  std::cout << "transcript: " << transcript.size() << " bytes, " << nodes_lines
            << " searches, fnv1a " << std::hex;
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char ch : transcript) {
    h = (h ^ ch) * 1099511628211ULL;
  }
  std::cout << h << std::dec << '\n';
  return all_ok ? 0 : 1;
}
