#include "convertbw/lp.hpp"

namespace convertbw {

LpProblem::LpProblem(std::vector<LpConstraint> cons, Rat xm, Rat ym)
    : constraints(std::move(cons)), x_max(std::move(xm)), y_max(std::move(ym)) {
  if (x_max < Rat(0) || y_max < Rat(0)) throw BadParams("negative box bound");
  for (const LpConstraint& c : constraints) {
    if (c.a == Rat(0) && c.b == Rat(0)) {
      throw BadParams("degenerate constraint with a = b = 0");
    }
  }
}

std::optional<LpSolution> solve(const LpProblem& problem) {
  struct Line {
    Rat a, b, c;  // a x + b y = c
    bool is_box;
  };
  std::vector<Line> lines;
  for (const LpConstraint& c : problem.constraints) {
    lines.push_back({c.a, c.b, c.c, false});
  }
  lines.push_back({Rat(1), Rat(0), Rat(0), true});              // x = 0
  lines.push_back({Rat(0), Rat(1), Rat(0), true});              // y = 0
  lines.push_back({Rat(1), Rat(0), problem.x_max, true});       // x = x_max
  lines.push_back({Rat(0), Rat(1), problem.y_max, true});       // y = y_max

  bool found = false;
  Rat best_x, best_y;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Rat det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (det == Rat(0)) continue;  // parallel
      Rat x = (lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det;
      Rat y = (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det;
      if (x < Rat(0) || y < Rat(0) || x > problem.x_max || y > problem.y_max) continue;
      bool feasible = true;
      for (const LpConstraint& c : problem.constraints) {
        if (c.a * x + c.b * y < c.c) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      if (!found || x + y < best_x + best_y ||
          (x + y == best_x + best_y &&
           (x < best_x || (x == best_x && y < best_y)))) {
        found = true;
        best_x = x;
        best_y = y;
      }
    }
  }
  if (!found) return std::nullopt;

  std::size_t tight_constraints = 0;
  for (const LpConstraint& c : problem.constraints) {
    if (c.a * best_x + c.b * best_y == c.c) ++tight_constraints;
  }
  bool on_box = best_x == Rat(0) || best_y == Rat(0) || best_x == problem.x_max ||
                best_y == problem.y_max;
  // Degenerate vertices can lie on several lines at once; a box edge takes
  // naming precedence over a second tight constraint.
  VertexKind kind;
  if (tight_constraints >= 1 && on_box) {
    kind = VertexKind::ConstraintBox;
  } else if (tight_constraints >= 2) {
    kind = VertexKind::ConstraintConstraint;
  } else {
    kind = VertexKind::BoxCorner;
  }
  Rat value = best_x + best_y;
  return LpSolution{std::move(best_x), std::move(best_y), std::move(value), kind};
}

namespace {

struct P {
  long lam, kF, rF, rI, ell, kI;
  explicit P(const CodeParams& p)
      : lam(static_cast<long>(p.lambda)),
        kF(static_cast<long>(p.kF)),
        rF(static_cast<long>(p.rF)),
        rI(static_cast<long>(p.rI)),
        ell(static_cast<long>(p.ell)),
        kI(static_cast<long>(p.kI())) {}
};

LpConstraint rank_budget_constraint(const P& v) {
  // rF*x + kF*y >= lambda*kF*rF*ell
  return LpConstraint{Rat(v.rF), Rat(v.kF), Rat(v.lam * v.kF * v.rF * v.ell)};
}

}  // namespace

LpProblem thm1_problem(const CodeParams& p) {
  if (!(p.kF <= p.rF)) throw RegimeMismatch("requires kF <= rF");
  P v(p);
  return LpProblem({rank_budget_constraint(v)}, Rat(v.kI * v.ell), Rat(v.rI * v.ell));
}

LpProblem thm2_problem(const CodeParams& p) {
  if (!(p.rF < p.kF)) throw RegimeMismatch("requires rF < kF");
  if (!(p.rI <= p.kF)) throw RegimeMismatch("requires rI <= kF");
  P v(p);
  // x >= lambda*kF*(lambda-1)*rF*ell / ((lambda-1)*rF + rI)
  LpConstraint floor_x{Rat(1), Rat(0),
                       Rat(v.lam * v.kF * (v.lam - 1) * v.rF * v.ell,
                           (v.lam - 1) * v.rF + v.rI)};
  return LpProblem({rank_budget_constraint(v), floor_x}, Rat(v.kI * v.ell),
                   Rat(v.rI * v.ell));
}

LpProblem thm3_problem(const CodeParams& p) {
  if (!(p.rF < p.kF)) throw RegimeMismatch("requires rF < kF");
  if (!(p.kF < p.rI)) throw RegimeMismatch("requires kF < rI");
  P v(p);
  LpConstraint second{Rat((v.lam - 1) * v.rF + v.kF, v.kF),
                      Rat(v.lam * (v.rI - v.kF), v.rI),
                      Rat(v.lam * (v.lam - 1) * v.rF * v.ell)};
  return LpProblem({rank_budget_constraint(v), second}, Rat(v.lam * v.kF * v.ell),
                   Rat(v.rI * v.ell));
}

LpProblem oracle_problem(const CodeParams& p) {
  if (p.kF <= p.rF) return thm1_problem(p);
  if (p.rI <= p.kF) return thm2_problem(p);
  return thm3_problem(p);
}

}  // namespace convertbw
