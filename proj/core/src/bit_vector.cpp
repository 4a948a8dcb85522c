#include "isoset/bit_vector.hpp"

#include <algorithm>

namespace isoset {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~word_type{0} : word_type{0}) {
  clear_tail();
}

void BitVector::clear_tail() noexcept {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (word_type{1} << rem) - 1;
  }
}

void BitVector::reset_all() noexcept { std::fill(words_.begin(), words_.end(), word_type{0}); }

void BitVector::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~word_type{0});
  clear_tail();
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (const word_type w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

bool BitVector::intersects(const BitVector& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) {
      return true;
    }
  }
  return false;
}

bool BitVector::is_subset_of(const BitVector& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const word_type o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) {
      return false;
    }
  }
  return true;
}

std::size_t BitVector::count_and(const BitVector& other) const noexcept {
  std::size_t n = 0;
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

BitVector& BitVector::operator&=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    words_[i] |= other.words_[i];
  }
  clear_tail();
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    words_[i] ^= other.words_[i];
  }
  clear_tail();
  return *this;
}

BitVector& BitVector::and_not(const BitVector& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    words_[i] &= ~other.words_[i];
  }
  return *this;
}

void BitVector::flip() noexcept {
  for (word_type& w : words_) {
    w = ~w;
  }
  clear_tail();
}

std::size_t BitVector::find_first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return npos;
}

std::size_t BitVector::find_next(std::size_t pos) const noexcept {
  ++pos;
  if (pos >= size_) {
    return npos;
  }
  std::size_t w = pos / kWordBits;
  word_type bits = words_[w] & (~word_type{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    if (++w == words_.size()) {
      return npos;
    }
    bits = words_[w];
  }
}

std::vector<std::size_t> BitVector::positions() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t p) { out.push_back(p); });
  return out;
}

std::size_t BitVector::hash() const noexcept {
  // 64-bit FNV-1a over the words, seeded with the size.
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (const word_type w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
  if (a.size_ != b.size_) {
    return a.size_ <=> b.size_;
  }
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) {
      return a.words_[i] <=> b.words_[i];
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace isoset
