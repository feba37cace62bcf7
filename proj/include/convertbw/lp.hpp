#pragma once

#include <optional>
#include <vector>

#include "convertbw/bounds.hpp"
#include "convertbw/rational.hpp"

namespace convertbw {

/// Halfplane a*x + b*y >= c. a and b must not both be zero.
struct LpConstraint {
  Rat a, b, c;
};

/// Minimize x + y subject to the constraints and 0 <= x <= x_max,
/// 0 <= y <= y_max.
struct LpProblem {
  std::vector<LpConstraint> constraints;
  Rat x_max, y_max;

  LpProblem(std::vector<LpConstraint> cons, Rat xm, Rat ym);
};

enum class VertexKind { ConstraintConstraint, ConstraintBox, BoxCorner };

struct LpSolution {
  Rat x, y;
  Rat value;  // x + y
  VertexKind vertex_kind;
};

/// Exact solve by enumerating pairwise intersections of the boundary lines
/// (each constraint as an equality, plus the four box edges), keeping
/// feasible points, and minimizing x + y with lexicographic (x, y) tie-break.
/// Returns nullopt when no feasible vertex exists, i.e. the region is empty.
std::optional<LpSolution> solve(const LpProblem& problem);

// The two-variable reductions used by the bound proofs, with
// x = reads from message symbols and y = reads from retired symbols.
LpProblem thm1_problem(const CodeParams& p);  // requires kF <= rF
LpProblem thm2_problem(const CodeParams& p);  // requires rF < kF, rI <= kF
LpProblem thm3_problem(const CodeParams& p);  // requires rF < kF < rI

/// The problem whose optimum the closed-form bound for p must equal.
LpProblem oracle_problem(const CodeParams& p);

}  // namespace convertbw
