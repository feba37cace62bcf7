#include "convertbw/matrix.hpp"

#include <string>
#include <unordered_set>

namespace convertbw {

namespace {

void require_same_field(const FFMatrix& a, const FFMatrix& b) {
  if (a.field() != b.field()) {
    throw DimensionMismatch("operands live in different fields");
  }
}

/// Gauss-Jordan on an augmented matrix [m | rhs-part]: pivots are searched in
/// the first lead_cols columns only, the elimination applies to all columns.
/// Returns the pivot column per pivot row.
std::vector<std::size_t> rref_in_place(FFMatrix& m, std::size_t lead_cols) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < lead_cols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).value == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        FieldElement tmp = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, tmp);
      }
    }
    FieldElement inv = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.set(r, j, f.mul(m.at(r, j), inv));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).value == 0) continue;
      FieldElement factor = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

FFMatrix FFMatrix::identity(PrimeField field, std::size_t n) {
  FFMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

FFMatrix FFMatrix::from_signed(PrimeField field,
                               const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  FFMatrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged row in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.element(rows[i][j]));
  }
  return m;
}

FFMatrix multiply(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  const PrimeField& f = a.field();
  FFMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      FieldElement av = a.at(i, t);
      if (av.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(av, b.at(t, j))));
      }
    }
  }
  return out;
}

std::vector<FieldElement> row_times(const PrimeField& field,
                                    std::span<const FieldElement> v,
                                    const FFMatrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch("row_times length");
  std::vector<FieldElement> out(a.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i].value == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[j] = field.add(out[j], field.mul(v[i], a.at(i, j)));
    }
  }
  return out;
}

std::size_t rank(const FFMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FFMatrix work = m;
  return rref_in_place(work, work.cols()).size();
}

FFMatrix submatrix(const FFMatrix& m, std::span<const std::size_t> row_indices,
                   std::span<const std::size_t> col_indices) {
  auto check = [](std::span<const std::size_t> idx, std::size_t limit, const char* what) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t v : idx) {
      if (v >= limit) {
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(v) +
                              " out of range " + std::to_string(limit));
      }
      if (!seen.insert(v).second) {
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(v) +
                              " duplicated");
      }
    }
  };
  check(row_indices, m.rows(), "row");
  check(col_indices, m.cols(), "col");
  FFMatrix out(m.field(), row_indices.size(), col_indices.size());
  for (std::size_t i = 0; i < row_indices.size(); ++i) {
    for (std::size_t j = 0; j < col_indices.size(); ++j) {
      out.set(i, j, m.at(row_indices[i], col_indices[j]));
    }
  }
  return out;
}

FFMatrix hconcat(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("hconcat: " + std::to_string(a.rows()) + " vs " +
                            std::to_string(b.rows()) + " rows");
  }
  FFMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

FFMatrix vconcat(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("vconcat: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.cols()) + " cols");
  }
  FFMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  return out;
}

bool column_space_contains(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("column_space_contains: row counts differ");
  }
  return rank(a) == rank(hconcat(a, b));
}

std::optional<FFMatrix> solve_right(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("solve_right: row counts differ");
  }
  FFMatrix aug = hconcat(a, b);
  std::vector<std::size_t> pivots = rref_in_place(aug, a.cols());
  // A rank-deficient trailing row with a nonzero rhs part means no solution.
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
    for (std::size_t j = a.cols(); j < aug.cols(); ++j) {
      if (aug.at(i, j).value != 0) return std::nullopt;
    }
  }
  FFMatrix x(a.field(), a.cols(), b.cols());
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.set(pivots[pr], j, aug.at(pr, a.cols() + j));
    }
  }
  return x;
}

bool is_invertible(const FFMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return rank(m) == m.rows();
}

}  // namespace convertbw
