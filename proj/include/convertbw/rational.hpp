#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "convertbw/errors.hpp"

namespace convertbw {

using BigInt = mpz_class;

/// Exact rational with canonical representation: gcd(|num|, den) = 1, den > 0.
/// Backed by GMP.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long v) : q_(v) {}
  Rat(const BigInt& v) : q_(v) {}
  Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw BadParams("rational with zero denominator");
    q_.canonicalize();
  }
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  /// Smallest integer >= value.
  BigInt ceil() const {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return out;
  }

  std::string str() const { return q_.get_str(); }  // "num/den" or "num"

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.q_ + b.q_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.q_ - b.q_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.q_ * b.q_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.q_ == 0) throw BadParams("rational division by zero");
    return Rat(a.q_ / b.q_);
  }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Checked conversion for serialization; desk-scale values always fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace convertbw
