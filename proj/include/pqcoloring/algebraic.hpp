#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqcoloring/field.hpp"

namespace pqc {

/// A vertex of K_{q^2} identified with a vector in F_q x F_q.
struct Vector2 {
  FieldElement x1;
  FieldElement x2;

  friend bool operator==(const Vector2&, const Vector2&) = default;
};

/// Lexicographic order on (rank(x1), rank(x2)); with the natural residue
/// order this is plain lexicographic order on the coordinates.
inline bool lex_less(const Vector2& a, const Vector2& b) {
  if (rank(a.x1) != rank(b.x1)) return rank(a.x1) < rank(b.x1);
  return rank(a.x2) < rank(b.x2);
}

struct AlgBaseColor {
  uint32_t value = 0;   // x1*y1 - x2 - y2 in F_q
  uint8_t eq_flag = 0;  // 0 iff x1 == y1

  friend auto operator<=>(const AlgBaseColor&, const AlgBaseColor&) = default;
};

/// S/T membership label; E marks the diagonal case of equal first
/// coordinates, which the partition itself does not cover.
enum class StLabel : uint8_t { S = 0, T = 1, E = 2 };

struct AlgModColor {
  StLabel first = StLabel::S;
  StLabel second = StLabel::S;

  friend auto operator<=>(const AlgModColor&, const AlgModColor&) = default;
};

struct AlgColor {
  AlgBaseColor base;
  AlgModColor mod;

  friend auto operator<=>(const AlgColor&, const AlgColor&) = default;
};

/// For each alpha, the map beta -> 2*alpha - beta is a fixed-point-free
/// involution on F_q \ {alpha}; its orbit pairs form a perfect matching.
/// S_alpha takes the smaller-rank endpoint of every pair, T_alpha the other,
/// so neither side contains a matched pair. The table is immutable once
/// built and safe to share across threads.
class StTable {
 public:
  explicit StTable(const PrimeField& field) : q_(field.order()) {
    table_.assign(static_cast<size_t>(q_) * q_, StLabel::E);
    for (uint32_t alpha = 0; alpha < q_; ++alpha) {
      for (uint32_t beta = 0; beta < q_; ++beta) {
        if (beta == alpha) continue;
        const FieldElement partner = field.element(2ull * alpha) -
                                     field.element(beta);
        table_[static_cast<size_t>(alpha) * q_ + beta] =
            beta < partner.value ? StLabel::S : StLabel::T;
      }
    }
  }

  uint32_t order() const { return q_; }

  /// f_alpha(beta): S or T per the partition, E when alpha == beta.
  StLabel label(uint32_t alpha, uint32_t beta) const {
    if (alpha >= q_ || beta >= q_)
      throw std::out_of_range("StTable::label argument out of field");
    return table_[static_cast<size_t>(alpha) * q_ + beta];
  }

  StLabel label(const FieldElement& alpha, const FieldElement& beta) const {
    if (alpha.modulus != q_ || beta.modulus != q_)
      throw std::invalid_argument("StTable used with a different field");
    return label(alpha.value, beta.value);
  }

  /// (S_alpha, T_alpha) as sorted residue lists.
  std::pair<std::vector<uint32_t>, std::vector<uint32_t>> partition(
      uint32_t alpha) const {
    std::pair<std::vector<uint32_t>, std::vector<uint32_t>> out;
    for (uint32_t beta = 0; beta < q_; ++beta) {
      if (beta == alpha) continue;
      (label(alpha, beta) == StLabel::S ? out.first : out.second)
          .push_back(beta);
    }
    return out;
  }

 private:
  uint32_t q_;
  std::vector<StLabel> table_;
};

namespace detail {

inline void require_colorable(const Vector2& x, const Vector2& y) {
  same_modulus(x.x1, y.x1);
  if (x == y) throw std::invalid_argument("loops carry no color");
}

}  // namespace detail

inline AlgBaseColor chi1(const Vector2& x, const Vector2& y) {
  detail::require_colorable(x, y);
  const FieldElement v = x.x1 * y.x1 - x.x2 - y.x2;
  return {v.value, static_cast<uint8_t>(x.x1 == y.x1 ? 0 : 1)};
}

/// Evaluated on the ordered pair (min, max) under lex_less; (E, E) when the
/// first coordinates coincide.
inline AlgModColor chi2(const StTable& st, const Vector2& x, const Vector2& y) {
  detail::require_colorable(x, y);
  if (x.x1 == y.x1) return {StLabel::E, StLabel::E};
  const Vector2& lo = lex_less(x, y) ? x : y;
  const Vector2& hi = lex_less(x, y) ? y : x;
  return {st.label(lo.x1, hi.x1), st.label(hi.x1, lo.x1)};
}

inline AlgColor chi(const StTable& st, const Vector2& x, const Vector2& y) {
  return {chi1(x, y), chi2(st, x, y)};
}

inline char to_char(StLabel l) {
  switch (l) {
    case StLabel::S: return 'S';
    case StLabel::T: return 'T';
    default: return 'E';
  }
}

inline std::string to_string(const AlgColor& c) {
  return "((" + std::to_string(c.base.value) + "," +
         std::to_string(c.base.eq_flag) + "),(" + to_char(c.mod.first) + "," +
         to_char(c.mod.second) + "))";
}

}  // namespace pqc
