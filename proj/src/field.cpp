#include "convertbw/field.hpp"

#include <string>

namespace convertbw {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  // Products must fit in uint64.
  if (p > 0xFFFFFFFFull) {
    throw BadParams("modulus too large: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw BadParams("modulus is not prime: " + std::to_string(p));
  }
}

FieldElement PrimeField::element(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  std::uint64_t s = a.value + b.value;
  if (s >= p_) s -= p_;
  return {s};
}

FieldElement PrimeField::sub(FieldElement a, FieldElement b) const {
  return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  return {(a.value * b.value) % p_};
}

FieldElement PrimeField::neg(FieldElement a) const {
  return {a.value == 0 ? 0 : p_ - a.value};
}

FieldElement PrimeField::pow(FieldElement base, std::uint64_t e) const {
  FieldElement acc = one();
  FieldElement b = base;
  while (e > 0) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw ZeroInverse();
  return pow(a, p_ - 2);
}

}  // namespace convertbw
