#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lofs {

/// Fixed-length bit vector backed by 64-bit words. Bits past size() are
/// always zero so that word-level comparisons are exact.
class DynBitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DynBitset() = default;
  explicit DynBitset(std::size_t n, bool value = false)
      : size_(n), words_((n + kWordBits - 1) / kWordBits, value ? ~word_type{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const word_type* data() const noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void set(std::size_t i, bool v) noexcept {
    if (v) set(i); else reset(i);
  }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }
  void set_all() noexcept {
    std::fill(words_.begin(), words_.end(), ~word_type{0});
    trim();
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const noexcept { return find_next_from(0); }
  std::size_t find_next(std::size_t i) const noexcept { return find_next_from(i + 1); }

  DynBitset& operator|=(const DynBitset& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// this := this \ o
  DynBitset& subtract(const DynBitset& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  DynBitset operator~() const {
    DynBitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

  bool is_subset_of(const DynBitset& o) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits) {
        const auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + tz);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  /// Lexicographic on the bit vector read from index 0 upward.
  friend bool lex_less(const DynBitset& a, const DynBitset& b) noexcept {
    for (std::size_t i = 0; i < a.size_ && i < b.size_; ++i)
      if (a.test(i) != b.test(i)) return !a.test(i);
    return a.size_ < b.size_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % kWordBits)) - 1;
  }
  std::size_t find_next_from(std::size_t i) const noexcept {
    if (i >= size_) return size_;
    std::size_t w = i / kWordBits;
    word_type bits = words_[w] & (~word_type{0} << (i % kWordBits));
    while (true) {
      if (bits) return std::min(size_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w == words_.size()) return size_;
      bits = words_[w];
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

}  // namespace lofs
