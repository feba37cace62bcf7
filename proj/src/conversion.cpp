#include "convertbw/conversion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace convertbw {

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t>& sorted_set,
                                    std::size_t ell) {
  std::vector<std::size_t> out;
  out.reserve(ell - sorted_set.size());
  std::size_t k = 0;
  for (std::size_t t = 0; t < ell; ++t) {
    if (k < sorted_set.size() && sorted_set[k] == t) {
      ++k;
    } else {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

ReadPlan ReadPlan::empty_plan(const CodeParams& params) {
  return ReadPlan{std::vector<std::vector<std::size_t>>(params.nI())};
}

ReadPlan ReadPlan::full_plan(const CodeParams& params) {
  std::vector<std::size_t> all(params.ell);
  std::iota(all.begin(), all.end(), 0);
  return ReadPlan{std::vector<std::vector<std::size_t>>(params.nI(), all)};
}

ReadPlan ReadPlan::checked(std::vector<std::vector<std::size_t>> d,
                           const CodeParams& params) {
  if (d.size() != params.nI()) {
    throw DimensionMismatch("plan must have nI = " + std::to_string(params.nI()) +
                            " read sets, got " + std::to_string(d.size()));
  }
  for (auto& set : d) {
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= params.ell) {
        throw IndexOutOfRange("subsymbol index " + std::to_string(set[i]) +
                              " out of range " + std::to_string(params.ell));
      }
      if (i > 0 && set[i] == set[i - 1]) {
        throw IndexOutOfRange("duplicate subsymbol index " + std::to_string(set[i]));
      }
    }
  }
  return ReadPlan{std::move(d)};
}

std::size_t ReadPlan::read_total() const {
  std::size_t total = 0;
  for (const auto& set : D) total += set.size();
  return total;
}

RestrictedMatrices build_restricted(const ConvertiblePair& pair, const ReadPlan& plan) {
  const CodeParams& prm = pair.params;
  if (plan.D.size() != prm.nI()) {
    throw DimensionMismatch("plan sized for a different code");
  }
  const PrimeField& f = pair.B.field();
  const std::size_t ell = prm.ell;

  // Unread rows, per message block row, shared by both restrictions.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> block_row_count(prm.kI());
  for (std::size_t j = 0; j < prm.kI(); ++j) {
    auto keep = complement(plan.D[j], ell);
    block_row_count[j] = keep.size();
    for (std::size_t t : keep) rows.push_back(j * ell + t);
  }

  // Read columns of the initial parity part.
  std::vector<std::size_t> cols;
  for (std::size_t j = prm.kI(); j < prm.nI(); ++j) {
    for (std::size_t t : plan.D[j]) cols.push_back((j - prm.kI()) * ell + t);
  }

  FFMatrix b_tilde = submatrix(pair.B, rows, cols);

  // Final-code restriction: block i keeps the unread rows of C's block rows,
  // where "unread" refers to initial symbol i*kF + u.
  std::vector<FFMatrix> c_blocks;
  c_blocks.reserve(prm.lambda);
  for (std::size_t i = 0; i < prm.lambda; ++i) {
    std::vector<std::size_t> crows;
    for (std::size_t u = 0; u < prm.kF; ++u) {
      for (std::size_t t : complement(plan.D[i * prm.kF + u], ell)) {
        crows.push_back(u * ell + t);
      }
    }
    std::vector<std::size_t> ccols(pair.C.cols());
    std::iota(ccols.begin(), ccols.end(), 0);
    c_blocks.push_back(submatrix(pair.C, crows, ccols));
  }

  std::size_t total_rows = rows.size();
  FFMatrix c_tilde(f, total_rows, prm.lambda * prm.rF * ell);
  std::size_t row_off = 0;
  for (std::size_t i = 0; i < prm.lambda; ++i) {
    const FFMatrix& blk = c_blocks[i];
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t c = 0; c < blk.cols(); ++c) {
        c_tilde.set(row_off + r, i * prm.rF * ell + c, blk.at(r, c));
      }
    }
    row_off += blk.rows();
  }

  // Row stacks of b_tilde aligned with the lambda final codewords.
  std::vector<FFMatrix> b_blocks;
  b_blocks.reserve(prm.lambda);
  std::vector<std::size_t> all_cols(b_tilde.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  std::size_t consumed = 0;
  for (std::size_t i = 0; i < prm.lambda; ++i) {
    std::size_t stack_rows = 0;
    for (std::size_t u = 0; u < prm.kF; ++u) stack_rows += block_row_count[i * prm.kF + u];
    std::vector<std::size_t> idx(stack_rows);
    std::iota(idx.begin(), idx.end(), consumed);
    b_blocks.push_back(submatrix(b_tilde, idx, all_cols));
    consumed += stack_rows;
  }

  return RestrictedMatrices{std::move(b_tilde), std::move(c_tilde),
                            std::move(b_blocks), std::move(c_blocks),
                            total_rows, cols.size()};
}

FeasibilityReport check_feasible(const ConvertiblePair& pair, const ReadPlan& plan) {
  RestrictedMatrices rm = build_restricted(pair, plan);
  FeasibilityReport rep;
  rep.rank_B = rank(rm.B_restricted);
  rep.rank_C = rank(rm.C_restricted);
  rep.holds = rank(hconcat(rm.B_restricted, rm.C_restricted)) == rep.rank_B;
  rep.B_full_col_rank = rep.rank_B == rm.B_restricted.cols();
  return rep;
}

FFMatrix restricted_generator(const ConvertiblePair& pair, const ReadPlan& plan) {
  const CodeParams& prm = pair.params;
  if (plan.D.size() != prm.nI()) {
    throw DimensionMismatch("plan sized for a different code");
  }
  const PrimeField& f = pair.B.field();
  const std::size_t ell = prm.ell;
  FFMatrix g(f, prm.kI() * ell, plan.read_total());
  std::size_t col = 0;
  for (std::size_t j = 0; j < prm.nI(); ++j) {
    for (std::size_t t : plan.D[j]) {
      if (j < prm.kI()) {
        g.set(j * ell + t, col, f.one());
      } else {
        std::size_t src = (j - prm.kI()) * ell + t;
        for (std::size_t r = 0; r < g.rows(); ++r) g.set(r, col, pair.B.at(r, src));
      }
      ++col;
    }
  }
  return g;
}

namespace {

FFMatrix final_parity_blockdiag(const ConvertiblePair& pair) {
  const CodeParams& prm = pair.params;
  const std::size_t ell = prm.ell;
  FFMatrix out(pair.C.field(), prm.kI() * ell, prm.lambda * prm.rF * ell);
  for (std::size_t i = 0; i < prm.lambda; ++i) {
    for (std::size_t r = 0; r < prm.kF * ell; ++r) {
      for (std::size_t c = 0; c < prm.rF * ell; ++c) {
        out.set(i * prm.kF * ell + r, i * prm.rF * ell + c, pair.C.at(r, c));
      }
    }
  }
  return out;
}

}  // namespace

std::optional<Transform> derive_transform(const ConvertiblePair& pair,
                                          const ReadPlan& plan) {
  FFMatrix g = restricted_generator(pair, plan);
  FFMatrix target = final_parity_blockdiag(pair);
  std::optional<FFMatrix> t = solve_right(g, target);
  if (!t) return std::nullopt;
  if (multiply(g, *t) != target) {
    throw InternalCheckFailed("transform does not reproduce the final parities");
  }
  return Transform{std::move(*t)};
}

std::vector<std::vector<FieldElement>> convert(const ConvertiblePair& pair,
                                               const ReadPlan& plan,
                                               const Transform& t,
                                               std::span<const FieldElement> m) {
  const CodeParams& prm = pair.params;
  const PrimeField& f = pair.B.field();
  const std::size_t ell = prm.ell;
  if (t.T.rows() != plan.read_total() || t.T.cols() != prm.lambda * prm.rF * ell) {
    throw DimensionMismatch("transform shape does not match the plan");
  }

  std::vector<FieldElement> codeword = encode_initial(pair, m);
  std::vector<FieldElement> reads;
  reads.reserve(plan.read_total());
  for (std::size_t j = 0; j < prm.nI(); ++j) {
    for (std::size_t idx : plan.D[j]) reads.push_back(codeword[j * ell + idx]);
  }
  std::vector<FieldElement> new_subsymbols = row_times(f, reads, t.T);

  std::vector<std::vector<FieldElement>> finals(prm.lambda);
  for (std::size_t i = 0; i < prm.lambda; ++i) {
    std::vector<FieldElement>& cw = finals[i];
    cw.reserve(prm.nF() * ell);
    for (std::size_t u = 0; u < prm.kF; ++u) {
      std::size_t sym = i * prm.kF + u;
      for (std::size_t s = 0; s < ell; ++s) cw.push_back(codeword[sym * ell + s]);
    }
    for (std::size_t s = 0; s < prm.rF * ell; ++s) {
      cw.push_back(new_subsymbols[i * prm.rF * ell + s]);
    }
  }
  return finals;
}

CostReport cost(const ReadPlan& plan, const CodeParams& params) {
  if (plan.D.size() != params.nI()) {
    throw DimensionMismatch("plan sized for different params");
  }
  CostReport rep;
  rep.read = plan.read_total();
  rep.write = params.lambda * params.rF * params.ell;
  rep.total = rep.read + rep.write;
  return rep;
}

}  // namespace convertbw
