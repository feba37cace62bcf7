#include "convertbw/code_model.hpp"

#include <numeric>
#include <string>

#include "convertbw/parallel.hpp"
#include "convertbw/prng.hpp"

namespace convertbw {

namespace {

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> block_range(std::size_t block, std::size_t ell) {
  std::vector<std::size_t> out(ell);
  std::iota(out.begin(), out.end(), block * ell);
  return out;
}

FFMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                       SplitMix64& rng) {
  FFMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, FieldElement{rng.below(field.modulus())});
    }
  }
  return m;
}

}  // namespace

CodeParams validate_params(std::size_t lambda, std::size_t kF, std::size_t rF,
                           std::size_t rI, std::size_t ell, std::uint64_t p) {
  if (lambda < 2) throw BadParams("lambda must be at least 2");
  if (kF < 1 || rF < 1 || rI < 1 || ell < 1) {
    throw BadParams("kF, rF, rI, ell must all be positive");
  }
  PrimeField field(p);  // primality check
  (void)field;
  return CodeParams{lambda, kF, rF, rI, ell, p};
}

ConvertiblePair::ConvertiblePair(CodeParams params_, FFMatrix B_, FFMatrix C_)
    : params(params_), B(std::move(B_)), C(std::move(C_)) {
  if (B.rows() != params.kI() * params.ell || B.cols() != params.rI * params.ell) {
    throw DimensionMismatch("initial parity must be (kI*ell) x (rI*ell)");
  }
  if (C.rows() != params.kF * params.ell || C.cols() != params.rF * params.ell) {
    throw DimensionMismatch("final parity must be (kF*ell) x (rF*ell)");
  }
  if (B.field().modulus() != params.p || C.field().modulus() != params.p) {
    throw DimensionMismatch("parity matrices must live in F_p");
  }
}

bool is_mds_systematic(std::size_t n, std::size_t k, std::size_t ell,
                       const FFMatrix& parity) {
  if (k > n) throw BadParams("k exceeds n");
  std::size_t r = n - k;
  if (parity.rows() != k * ell || parity.cols() != r * ell) {
    throw DimensionMismatch("parity must be (k*ell) x ((n-k)*ell)");
  }
  for (std::size_t s = 1; s <= std::min(k, r); ++s) {
    auto row_sets = all_subsets(k, s);
    auto col_sets = all_subsets(r, s);
    std::size_t total = row_sets.size() * col_sets.size();
    bool ok = parallel_all_of(total, [&](std::size_t idx) {
      const auto& rs = row_sets[idx / col_sets.size()];
      const auto& cs = col_sets[idx % col_sets.size()];
      std::vector<std::size_t> rows, cols;
      for (std::size_t b : rs) {
        auto range = block_range(b, ell);
        rows.insert(rows.end(), range.begin(), range.end());
      }
      for (std::size_t b : cs) {
        auto range = block_range(b, ell);
        cols.insert(cols.end(), range.begin(), range.end());
      }
      return is_invertible(submatrix(parity, rows, cols));
    });
    if (!ok) return false;
  }
  return true;
}

bool is_mds_by_subsets(std::size_t n, std::size_t k, std::size_t ell,
                       const FFMatrix& parity) {
  if (k > n) throw BadParams("k exceeds n");
  std::size_t r = n - k;
  if (parity.rows() != k * ell || parity.cols() != r * ell) {
    throw DimensionMismatch("parity must be (k*ell) x ((n-k)*ell)");
  }
  const PrimeField& f = parity.field();
  auto subsets = all_subsets(n, k);
  return parallel_all_of(subsets.size(), [&](std::size_t idx) {
    const auto& symbols = subsets[idx];
    // columns of [I | parity] on the selected symbol blocks
    FFMatrix sel(f, k * ell, k * ell);
    std::size_t out_col = 0;
    for (std::size_t s : symbols) {
      for (std::size_t t = 0; t < ell; ++t, ++out_col) {
        if (s < k) {
          sel.set(s * ell + t, out_col, f.one());
        } else {
          std::size_t c = (s - k) * ell + t;
          for (std::size_t row = 0; row < k * ell; ++row) {
            sel.set(row, out_col, parity.at(row, c));
          }
        }
      }
    }
    return is_invertible(sel);
  });
}

ConvertiblePair random_mds_pair(const CodeParams& params, std::uint64_t seed,
                                std::size_t max_attempts) {
  if (max_attempts < 1) throw BadParams("max_attempts must be positive");
  PrimeField field(params.p);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 rng_b(derive_seed(seed, "mds-pair/B", attempt));
    SplitMix64 rng_c(derive_seed(seed, "mds-pair/C", attempt));
    FFMatrix b = random_matrix(field, params.kI() * params.ell, params.rI * params.ell, rng_b);
    FFMatrix c = random_matrix(field, params.kF * params.ell, params.rF * params.ell, rng_c);
    if (is_mds_systematic(params.nI(), params.kI(), params.ell, b) &&
        is_mds_systematic(params.nF(), params.kF, params.ell, c)) {
      return ConvertiblePair(params, std::move(b), std::move(c));
    }
  }
  throw GenerationFailed("no MDS pair found in " + std::to_string(max_attempts) +
                         " attempts (field may be too small)");
}

namespace {

std::vector<FieldElement> encode_systematic(const PrimeField& field,
                                            std::span<const FieldElement> m,
                                            const FFMatrix& parity) {
  std::vector<FieldElement> out(m.begin(), m.end());
  std::vector<FieldElement> par = row_times(field, m, parity);
  out.insert(out.end(), par.begin(), par.end());
  return out;
}

}  // namespace

std::vector<FieldElement> encode_initial(const ConvertiblePair& pair,
                                         std::span<const FieldElement> m) {
  if (m.size() != pair.params.kI() * pair.params.ell) {
    throw DimensionMismatch("message must have kI*ell subsymbols");
  }
  return encode_systematic(pair.B.field(), m, pair.B);
}

std::vector<FieldElement> encode_final(const ConvertiblePair& pair,
                                       std::span<const FieldElement> segment) {
  if (segment.size() != pair.params.kF * pair.params.ell) {
    throw DimensionMismatch("segment must have kF*ell subsymbols");
  }
  return encode_systematic(pair.C.field(), segment, pair.C);
}

}  // namespace convertbw
