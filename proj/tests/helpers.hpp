#pragma once

#include <cstdint>
#include <vector>

#include "convertbw/code_model.hpp"
#include "convertbw/matrix.hpp"
#include "convertbw/prng.hpp"

namespace convertbw::testing {

// Independent rank oracle: the rank is the largest s for which some s x s
// minor has nonzero determinant, with determinants computed by cofactor
// expansion. Shares no code with the elimination-based rank.
inline std::int64_t minor_det(const std::vector<std::vector<std::int64_t>>& m,
                              std::int64_t p) {
  std::size_t n = m.size();
  if (n == 0) return 1 % p;
  if (n == 1) return ((m[0][0] % p) + p) % p;
  std::int64_t det = 0;
  std::int64_t sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      sub.push_back(std::move(row));
    }
    det = (det + sign * m[0][j] % p * minor_det(sub, p)) % p;
    sign = -sign;
  }
  return ((det % p) + p) % p;
}

inline std::size_t brute_force_rank(const FFMatrix& m) {
  std::int64_t p = static_cast<std::int64_t>(m.field().modulus());
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t best = 0;
  for (std::uint32_t rmask = 0; rmask < (1u << rows); ++rmask) {
    for (std::uint32_t cmask = 0; cmask < (1u << cols); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::size_t s = __builtin_popcount(rmask);
      if (s <= best) continue;
      std::vector<std::vector<std::int64_t>> sub;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!(rmask >> i & 1)) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < cols; ++j) {
          if (cmask >> j & 1) row.push_back(static_cast<std::int64_t>(m.at(i, j).value));
        }
        sub.push_back(std::move(row));
      }
      if (minor_det(sub, p) != 0) best = s;
    }
  }
  return best;
}

inline FFMatrix random_matrix(const PrimeField& field, std::size_t rows,
                              std::size_t cols, SplitMix64& rng) {
  FFMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, FieldElement{rng.below(field.modulus())});
    }
  }
  return m;
}

inline Message random_message(const CodeParams& params, SplitMix64& rng) {
  Message m(params.kI() * params.ell);
  for (auto& v : m) v = FieldElement{rng.below(params.p)};
  return m;
}

}  // namespace convertbw::testing
