#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "convertbw/field.hpp"

namespace convertbw {

/// Dense row-major matrix over F_p. Zero-dimension matrices are legal and
/// behave as empty operands everywhere.
class FFMatrix {
 public:
  FFMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols) {}

  static FFMatrix identity(PrimeField field, std::size_t n);

  /// Builds a matrix from signed integers, reducing each entry mod p.
  static FFMatrix from_signed(PrimeField field,
                              const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, FieldElement v) { a_[r * cols_ + c] = v; }

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> a_;
};

FFMatrix multiply(const FFMatrix& a, const FFMatrix& b);

/// Row-times-matrix product; v has a.rows() entries, result has a.cols().
std::vector<FieldElement> row_times(const PrimeField& field,
                                    std::span<const FieldElement> v,
                                    const FFMatrix& a);

std::size_t rank(const FFMatrix& m);

/// Selected rows/columns in the given order; index sets must be in range and
/// duplicate-free. Empty selections yield zero-dimension matrices.
FFMatrix submatrix(const FFMatrix& m, std::span<const std::size_t> row_indices,
                   std::span<const std::size_t> col_indices);

FFMatrix hconcat(const FFMatrix& a, const FFMatrix& b);
FFMatrix vconcat(const FFMatrix& a, const FFMatrix& b);

/// True iff every column of b lies in the column span of a,
/// decided by rank(a) == rank([a|b]).
bool column_space_contains(const FFMatrix& a, const FFMatrix& b);

/// Solves a·X = b. Returns the canonical solution with free variables set to
/// zero (after reduced row echelon form), or nullopt when some column of b is
/// outside the column span of a.
std::optional<FFMatrix> solve_right(const FFMatrix& a, const FFMatrix& b);

/// Square with full rank; 0x0 counts as invertible.
bool is_invertible(const FFMatrix& m);

}  // namespace convertbw
