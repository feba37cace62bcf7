#pragma once

#include <cstdint>
#include <compare>

#include "convertbw/errors.hpp"

namespace convertbw {

/// A residue in [0, p). The modulus lives in the PrimeField that produced it.
struct FieldElement {
  std::uint64_t value = 0;

  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic context for F_p with p prime. Primality is checked once, by
/// trial division, when the context is created.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {p_ > 1 ? 1u : 0u}; }

  /// Reduces an arbitrary signed integer into [0, p).
  FieldElement element(std::int64_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;

  /// Multiplicative inverse; throws ZeroInverse on 0.
  FieldElement inv(FieldElement a) const;

  FieldElement pow(FieldElement base, std::uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace convertbw
