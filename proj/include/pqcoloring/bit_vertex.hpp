#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pqc {

inline constexpr uint32_t kMaxBlockSize = 8;  // beta, with beta^2 <= 64 bits

/// A vertex identified with a bit string of length beta^2, read as beta
/// blocks of beta bits each. Bit 1 is the most significant bit, so comparing
/// integer values orders vertices by the first differing bit.
class BitVertex {
 public:
  BitVertex() = default;

  BitVertex(uint64_t bits, uint32_t beta) : bits_(bits), beta_(beta) {
    if (beta == 0 || beta > kMaxBlockSize)
      throw std::invalid_argument("block size out of range: " +
                                  std::to_string(beta));
    if (beta * beta < 64 && (bits >> (beta * beta)) != 0)
      throw std::invalid_argument("bit string wider than beta^2");
  }

  /// Parses a '0'/'1' string whose length must be a perfect square.
  static BitVertex parse(std::string_view s) {
    uint32_t beta = 1;
    while (beta * beta < s.size()) ++beta;
    if (beta * beta != s.size())
      throw std::invalid_argument("bit string length must be a perfect square");
    uint64_t bits = 0;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("bit string must consist of 0/1");
      bits = bits << 1 | static_cast<uint64_t>(c - '0');
    }
    return {bits, beta};
  }

  uint32_t beta() const { return beta_; }
  uint32_t bit_length() const { return beta_ * beta_; }
  uint64_t value() const { return bits_; }

  /// The k-th block of beta bits, 1-based from the most significant end.
  uint32_t block(uint32_t k) const {
    if (k < 1 || k > beta_)
      throw std::out_of_range("block index " + std::to_string(k));
    const uint32_t shift = beta_ * (beta_ - k);
    return static_cast<uint32_t>(bits_ >> shift) & ((1u << beta_) - 1);
  }

  friend bool operator==(const BitVertex&, const BitVertex&) = default;

 private:
  uint64_t bits_ = 0;
  uint32_t beta_ = 0;
};

/// 1-based position of the first bit at which two distinct beta-bit blocks
/// differ, counting from the most significant bit.
inline uint32_t first_block_difference(uint32_t u, uint32_t v, uint32_t beta) {
  const uint32_t x = u ^ v;
  if (x == 0) throw std::invalid_argument("blocks are equal");
  return beta + 1 - static_cast<uint32_t>(std::bit_width(x));
}

}  // namespace pqc
