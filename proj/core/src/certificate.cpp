#include "isoset/certificate.hpp"

namespace isoset {

std::string_view to_string(Pattern p) noexcept {
  switch (p) {
    case Pattern::identity:
      return "identity";
    case Pattern::triangular:
      return "triangular";
    case Pattern::isolation:
      return "isolation";
  }
  return "unknown";
}

void PatternCertificate::add(Violation v) {
  if (violations_.size() >= kMaxViolations) {
    truncated_ = true;
    return;
  }
  violations_.push_back(v);
}

}  // namespace isoset
