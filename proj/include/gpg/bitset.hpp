#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gpg {

/// Square 0/1 matrix with each row packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::uint32_t n) : n_(n), words_((n + 63) / 64), bits_(std::size_t{n} * words_, 0) {}

  std::uint32_t size() const { return n_; }
  std::uint32_t words_per_row() const { return words_; }

  std::span<std::uint64_t> row(std::uint32_t i) { return {bits_.data() + std::size_t{i} * words_, words_}; }
  std::span<const std::uint64_t> row(std::uint32_t i) const {
    return {bits_.data() + std::size_t{i} * words_, words_};
  }

  bool test(std::uint32_t i, std::uint32_t j) const {
    return (bits_[std::size_t{i} * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::uint32_t i, std::uint32_t j) { bits_[std::size_t{i} * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::uint32_t i, std::uint32_t j) {
    bits_[std::size_t{i} * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  std::uint32_t row_weight(std::uint32_t i) const {
    std::uint32_t total = 0;
    for (std::uint64_t w : row(i)) total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
  }

  /// |row_i AND row_j|.
  std::uint32_t common(std::uint32_t i, std::uint32_t j) const {
    const std::uint64_t* a = bits_.data() + std::size_t{i} * words_;
    const std::uint64_t* b = bits_.data() + std::size_t{j} * words_;
    std::uint32_t total = 0;
    for (std::uint32_t w = 0; w < words_; ++w) total += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    return total;
  }

  /// Column indices of the set bits of row i, ascending.
  std::vector<std::uint32_t> neighbors(std::uint32_t i) const {
    std::vector<std::uint32_t> out;
    auto r = row(i);
    for (std::uint32_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// J - I - A.
  BitMatrix complement() const {
    BitMatrix out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      auto src = row(i);
      auto dst = out.row(i);
      for (std::uint32_t w = 0; w < words_; ++w) dst[w] = ~src[w];
      if (n_ % 64 != 0) dst[words_ - 1] &= (std::uint64_t{1} << (n_ % 64)) - 1;
      out.reset(i, i);
    }
    return out;
  }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace gpg
