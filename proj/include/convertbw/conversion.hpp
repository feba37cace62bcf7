#pragma once

#include <optional>

#include "convertbw/code_model.hpp"

namespace convertbw {

/// Per-symbol read sets: D[j] is the sorted, duplicate-free set of subsymbol
/// indices downloaded from initial symbol j during conversion.
struct ReadPlan {
  std::vector<std::vector<std::size_t>> D;

  static ReadPlan empty_plan(const CodeParams& params);
  static ReadPlan full_plan(const CodeParams& params);

  /// Normalizes (sorts) and validates against params; throws on bad shape,
  /// out-of-range index, or duplicate.
  static ReadPlan checked(std::vector<std::vector<std::size_t>> d,
                          const CodeParams& params);

  std::size_t beta(std::size_t j) const { return D[j].size(); }
  std::size_t read_total() const;

  friend bool operator==(const ReadPlan&, const ReadPlan&) = default;
};

/// The restriction of the generator pair induced by a read plan.
///
/// C_restricted is block-diagonal with lambda blocks; block i stacks, for each
/// local row u, the rows of C's block row u whose subsymbol index is unread at
/// initial symbol i*kF + u. B_restricted keeps, per block row j < kI, the
/// unread rows, and per block column j >= kI, the read columns. Rows of the
/// two matrices correspond to the same unread message subsymbols.
struct RestrictedMatrices {
  FFMatrix B_restricted;
  FFMatrix C_restricted;
  std::vector<FFMatrix> B_blocks;  // lambda row-stacks of B_restricted
  std::vector<FFMatrix> C_blocks;  // lambda diagonal blocks of C_restricted
  std::size_t row_count_unread;
  std::size_t col_count_read;
};

RestrictedMatrices build_restricted(const ConvertiblePair& pair, const ReadPlan& plan);

struct FeasibilityReport {
  bool holds = false;
  std::size_t rank_B = 0;
  std::size_t rank_C = 0;
  bool B_full_col_rank = false;
};

/// A plan admits a linear conversion iff the column space of B_restricted
/// contains that of C_restricted.
FeasibilityReport check_feasible(const ConvertiblePair& pair, const ReadPlan& plan);

/// Maps the read subsymbols (plan order: symbols ascending, indices ascending
/// within a symbol) to the lambda * rF * ell new parity subsymbols.
struct Transform {
  FFMatrix T;
};

/// Columns of G_initial at the read subsymbol positions.
FFMatrix restricted_generator(const ConvertiblePair& pair, const ReadPlan& plan);

/// Solves restricted_generator * T = blockdiag(C, ..., C). Returns nullopt
/// exactly when the plan is infeasible. The solution is verified before being
/// returned; a verification failure is a bug and throws InternalCheckFailed.
std::optional<Transform> derive_transform(const ConvertiblePair& pair,
                                          const ReadPlan& plan);

/// Runs a conversion: encodes m, extracts the reads, applies T, and copies the
/// unchanged symbols (initial symbol i*kF + u becomes symbol u of final
/// codeword i). Returns lambda final codewords of nF*ell subsymbols each.
std::vector<std::vector<FieldElement>> convert(const ConvertiblePair& pair,
                                               const ReadPlan& plan,
                                               const Transform& t,
                                               std::span<const FieldElement> m);

struct CostReport {
  std::size_t read = 0;
  std::size_t write = 0;  // fixed at lambda * rF * ell
  std::size_t total = 0;
};

CostReport cost(const ReadPlan& plan, const CodeParams& params);

}  // namespace convertbw
