#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isoset {

enum class Pattern { identity, triangular, isolation };

[[nodiscard]] std::string_view to_string(Pattern p) noexcept;

/// One offending entry. Indices are 0-based; observed/expected are the entry values,
/// except for count-type checks where they carry the count and its bound.
struct Violation {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t observed = 0;
  std::int64_t expected = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Named sub-result of a composite check.
struct SubCheck {
  std::string label;
  bool ok = true;
  std::string detail;
};

/// Outcome of checking a family or matrix against a pattern.
class PatternCertificate {
 public:
  static constexpr std::size_t kMaxViolations = 10'000;

  explicit PatternCertificate(Pattern pattern) : pattern_(pattern) {}

  [[nodiscard]] Pattern pattern() const noexcept { return pattern_; }
  [[nodiscard]] bool ok() const noexcept { return violations_.empty(); }
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }
  /// True when more than kMaxViolations were found and the list was cut.
  [[nodiscard]] bool truncated() const noexcept { return truncated_; }
  [[nodiscard]] const std::vector<SubCheck>& checks() const noexcept { return checks_; }

  void add(Violation v);
  void add_check(SubCheck check) { checks_.push_back(std::move(check)); }

 private:
  Pattern pattern_;
  std::vector<Violation> violations_;
  bool truncated_ = false;
  std::vector<SubCheck> checks_;
};

}  // namespace isoset
