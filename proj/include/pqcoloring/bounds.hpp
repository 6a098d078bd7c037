#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "pqcoloring/cfls.hpp"

namespace pqc {

struct LowerBound56 {
  double value = 0.0;      // sqrt(5n/6 - 95/144)
  uint64_t ceiling = 0;    // exact integer ceiling of the root
};

/// Lower bound on the number of colors any (5,6)-coloring of K_n needs.
/// The ceiling is computed in exact integer arithmetic: it is the least k
/// with 144*k^2 >= 120*n - 95.
inline LowerBound56 lower_bound_56(uint64_t n) {
  if (n < 5) throw std::domain_error("lower_bound_56 requires n >= 5");
  const uint64_t radicand_num = 120 * n - 95;  // over denominator 144
  uint64_t k = static_cast<uint64_t>(std::sqrt(double(radicand_num) / 144.0));
  while (144 * k * k < radicand_num) ++k;
  while (k > 0 && 144 * (k - 1) * (k - 1) >= radicand_num) --k;
  return {std::sqrt(double(radicand_num) / 144.0), k};
}

/// Order of the monochromatic-neighborhood subproblem: a (p,q)-coloring of
/// K_n with t colors yields a (p-1,q-1)-coloring of K_ceil((n-1)/t).
inline uint64_t recursion_bound(uint64_t n, uint64_t t) {
  if (t == 0) throw std::invalid_argument("recursion_bound: t must be >= 1");
  if (n == 0) return 0;
  return (n - 1 + t - 1) / t;
}

/// 8q * beta^(beta+1) * 2^(3 beta): product of the two color-count bounds.
inline uint64_t product_color_bound(uint32_t q, uint32_t beta) {
  return 8ull * q * cfls_color_bound(beta);
}

}  // namespace pqc
