#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace isoset {

/// Fixed-length bit vector packed into 64-bit words, 0-based positions.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparisons, popcounts and hashes never see garbage.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
  [[nodiscard]] const std::vector<word_type>& words() const noexcept { return words_; }

  [[nodiscard]] bool test(std::size_t pos) const noexcept {
    return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
  }
  void set(std::size_t pos) noexcept { words_[pos / kWordBits] |= word_type{1} << (pos % kWordBits); }
  void reset(std::size_t pos) noexcept {
    words_[pos / kWordBits] &= ~(word_type{1} << (pos % kWordBits));
  }
  void assign(std::size_t pos, bool value) noexcept {
    if (value) {
      set(pos);
    } else {
      reset(pos);
    }
  }
  void reset_all() noexcept;
  void set_all() noexcept;

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool any() const noexcept;
  [[nodiscard]] bool none() const noexcept { return !any(); }

  /// True iff some position is set in both vectors. Sizes must match.
  [[nodiscard]] bool intersects(const BitVector& other) const noexcept;
  /// True iff every set bit of *this is also set in `other`.
  [[nodiscard]] bool is_subset_of(const BitVector& other) const noexcept;
  [[nodiscard]] std::size_t count_and(const BitVector& other) const noexcept;

  BitVector& operator&=(const BitVector& other) noexcept;
  BitVector& operator|=(const BitVector& other) noexcept;
  BitVector& operator^=(const BitVector& other) noexcept;
  /// *this &= ~other
  BitVector& and_not(const BitVector& other) noexcept;
  /// Flip every in-range bit.
  void flip() noexcept;

  [[nodiscard]] std::size_t find_first() const noexcept;
  [[nodiscard]] std::size_t find_next(std::size_t pos) const noexcept;

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::size_t> positions() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders by size, then by the highest differing position (colex on sets).
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

[[nodiscard]] inline BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
[[nodiscard]] inline BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

}  // namespace isoset
