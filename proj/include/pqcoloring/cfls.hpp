#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pqcoloring/bit_vertex.hpp"

namespace pqc {

/// Base block color of an edge: the first block index at which the endpoints
/// differ, the unordered pair of those blocks, and for every block the
/// position of the first differing bit (0 when the blocks agree).
struct CflsBaseColor {
  uint8_t beta = 0;
  uint8_t head_index = 0;                      // first differing block, 1-based
  uint32_t head_lo = 0;                        // block pair, numerically sorted
  uint32_t head_hi = 0;
  std::array<uint8_t, kMaxBlockSize> diffs{};  // entries in {0,..,beta}

  friend auto operator<=>(const CflsBaseColor&, const CflsBaseColor&) = default;
};

/// Per-block +-1 comparison vector of the ordered endpoint pair.
struct SignVector {
  uint8_t beta = 0;
  std::array<int8_t, kMaxBlockSize> deltas{};

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

struct CflsColor {
  CflsBaseColor base;
  SignVector signs;

  friend auto operator<=>(const CflsColor&, const CflsColor&) = default;
};

namespace detail {

inline void require_colorable(const BitVertex& x, const BitVertex& y) {
  if (x.beta() != y.beta())
    throw std::invalid_argument("vertices have different block sizes");
  if (x.value() == y.value())
    throw std::invalid_argument("loops carry no color");
}

}  // namespace detail

inline CflsBaseColor phi1(const BitVertex& x, const BitVertex& y) {
  detail::require_colorable(x, y);
  const uint32_t beta = x.beta();
  CflsBaseColor c;
  c.beta = static_cast<uint8_t>(beta);
  for (uint32_t k = 1; k <= beta; ++k) {
    const uint32_t bx = x.block(k);
    const uint32_t by = y.block(k);
    if (bx == by) continue;
    c.diffs[k - 1] =
        static_cast<uint8_t>(first_block_difference(bx, by, beta));
    if (c.head_index == 0) {
      c.head_index = static_cast<uint8_t>(k);
      c.head_lo = std::min(bx, by);
      c.head_hi = std::max(bx, by);
    }
  }
  return c;
}

/// Evaluated on the ordered pair (min, max) under integer order of the whole
/// bit string, so the color of an unordered edge is well defined.
inline SignVector phi2(const BitVertex& x, const BitVertex& y) {
  detail::require_colorable(x, y);
  const BitVertex& lo = x.value() < y.value() ? x : y;
  const BitVertex& hi = x.value() < y.value() ? y : x;
  const uint32_t beta = x.beta();
  SignVector s;
  s.beta = static_cast<uint8_t>(beta);
  for (uint32_t k = 1; k <= beta; ++k)
    s.deltas[k - 1] = lo.block(k) <= hi.block(k) ? int8_t{1} : int8_t{-1};
  return s;
}

inline CflsColor phi(const BitVertex& x, const BitVertex& y) {
  return {phi1(x, y), phi2(x, y)};
}

/// beta^(beta+1) * 2^(3*beta), an upper bound on the number of phi colors.
inline uint64_t cfls_color_bound(uint32_t beta) {
  uint64_t p = 1;
  for (uint32_t i = 0; i <= beta; ++i) p *= beta;
  return p << (3 * beta);
}

namespace detail {

inline std::string block_bits(uint32_t block, uint32_t beta) {
  std::string s(beta, '0');
  for (uint32_t i = 0; i < beta; ++i)
    if ((block >> (beta - 1 - i)) & 1u) s[i] = '1';
  return s;
}

}  // namespace detail

inline std::string to_string(const CflsBaseColor& c) {
  std::string s = "((" + std::to_string(c.head_index) + ",{" +
                  detail::block_bits(c.head_lo, c.beta) + "," +
                  detail::block_bits(c.head_hi, c.beta) + "}),(";
  for (uint32_t k = 0; k < c.beta; ++k) {
    if (k) s += ',';
    s += std::to_string(c.diffs[k]);
  }
  s += "))";
  return s;
}

inline std::string to_string(const SignVector& v) {
  std::string s = "(";
  for (uint32_t k = 0; k < v.beta; ++k) {
    if (k) s += ',';
    s += v.deltas[k] > 0 ? '+' : '-';
  }
  s += ')';
  return s;
}

inline std::string to_string(const CflsColor& c) {
  return to_string(c.base) + to_string(c.signs);
}

}  // namespace pqc
