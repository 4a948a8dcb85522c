#include "isoset/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace isoset {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("ISOSET_MAX_DIM"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) {
      limits.max_dim = v;
    }
  }
  return limits;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) {
      return kMax;
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace isoset
