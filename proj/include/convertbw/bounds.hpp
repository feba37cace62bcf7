#pragma once

#include <string>
#include <vector>

#include "convertbw/code_model.hpp"
#include "convertbw/rational.hpp"

namespace convertbw {

enum class Regime {
  Thm1,
  Thm2Case1,
  Thm2Case2,
  Thm3Case1,
  Thm3Case2,
  Thm3Case3,
  Thm3Case4,
  PriorLow,
  PriorHigh,
};

std::string regime_name(Regime r);

/// Lower bound on read bandwidth, in subsymbols. The value is exact; the
/// ceiling is informational only.
struct BoundResult {
  Rat value;
  Regime regime;
  BigInt ceiling;
};

/// Discriminant lambda*kF^2 - (lambda-1)*(kF-rF)*rI separating the interior
/// optimum from the boundary optima when rF < kF < rI.
BigInt regime_discriminant(const CodeParams& p);

// Regime premises: kF <= rF (first); rF < kF and rI <= kF (second);
// rF < kF < rI (third). They partition the parameter space.
BoundResult bound_thm1(const CodeParams& p);
BoundResult bound_thm2(const CodeParams& p);
BoundResult bound_thm3(const CodeParams& p);

/// The earlier published bound used for comparison.
BoundResult bound_prior(const CodeParams& p);

/// Dispatches to the bound whose premise holds.
BoundResult lower_bound(const CodeParams& p);

struct Comparison {
  Rat ours;
  Rat prior;
  Rat delta;  // ours - prior
  bool strict = false;
  Regime ours_regime;
  Regime prior_regime;
};

Comparison compare(const CodeParams& p);

/// One algebraic identity relating our bound to the prior bound in a specific
/// sub-regime. lhs and rhs are the two derivations of the same quantity; they
/// must agree exactly, and the stated inequality against `threshold` must
/// hold. Violations indicate a formula transcription bug and throw.
struct IdentityCheck {
  std::string name;
  Rat lhs;
  Rat rhs;
  bool equal = false;
  bool inequality_holds = false;
};

/// Evaluates every identity applicable to p (possibly none) and throws
/// IdentityViolation on any failure.
std::vector<IdentityCheck> section4_identities(const CodeParams& p);

}  // namespace convertbw
