#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pqc {

/// Trial-division primality test; deterministic for any 32-bit input.
constexpr bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A residue in [0, q) tagged with its modulus, so values from different
/// fields refuse to combine.
struct FieldElement {
  uint32_t value = 0;
  uint32_t modulus = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

inline uint32_t same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus == 0 || a.modulus != b.modulus)
    throw std::invalid_argument("field mismatch: F_" + std::to_string(a.modulus) +
                                " vs F_" + std::to_string(b.modulus));
  return a.modulus;
}

}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const uint32_t q = detail::same_modulus(a, b);
  uint32_t s = a.value + b.value;
  if (s >= q) s -= q;
  return {s, q};
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const uint32_t q = detail::same_modulus(a, b);
  return {a.value >= b.value ? a.value - b.value : a.value + q - b.value, q};
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const uint32_t q = detail::same_modulus(a, b);
  return {static_cast<uint32_t>(uint64_t{a.value} * b.value % q), q};
}

/// Position of an element under the field's linear order. The order is the
/// natural residue order 0 < 1 < ... < q-1, so the rank is the residue.
inline uint32_t rank(const FieldElement& a) { return a.value; }

/// F_q for an odd prime q < 2^16. The modulus is validated at construction.
class PrimeField {
 public:
  explicit PrimeField(uint32_t q) : q_(q) {
    if (q >= (1u << 16))
      throw std::invalid_argument("modulus too large: " + std::to_string(q));
    if (q < 3 || q % 2 == 0 || !is_prime(q))
      throw std::invalid_argument("modulus must be an odd prime, got " +
                                  std::to_string(q));
  }

  uint32_t order() const { return q_; }

  FieldElement element(uint64_t v) const {
    return {static_cast<uint32_t>(v % q_), q_};
  }

  FieldElement zero() const { return {0, q_}; }
  FieldElement one() const { return {1, q_}; }

  FieldElement neg(const FieldElement& a) const {
    check(a);
    return {a.value == 0 ? 0u : q_ - a.value, q_};
  }

  /// Multiplicative inverse by Fermat exponentiation.
  FieldElement inverse(const FieldElement& a) const {
    check(a);
    if (a.value == 0) throw std::domain_error("zero has no inverse");
    uint64_t base = a.value, acc = 1;
    for (uint32_t e = q_ - 2; e != 0; e >>= 1) {
      if (e & 1) acc = acc * base % q_;
      base = base * base % q_;
    }
    return {static_cast<uint32_t>(acc), q_};
  }

 private:
  void check(const FieldElement& a) const {
    if (a.modulus != q_)
      throw std::invalid_argument("element belongs to F_" +
                                  std::to_string(a.modulus) + ", expected F_" +
                                  std::to_string(q_));
  }

  uint32_t q_;
};

}  // namespace pqc
