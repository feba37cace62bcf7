#pragma once

#include <functional>
#include <optional>

#include "convertbw/bounds.hpp"
#include "convertbw/conversion.hpp"

namespace convertbw {

enum class SearchMode { Exhaustive, PrefixOnly };

/// Exhaustive mode walks every assignment of read sets, in nondecreasing total
/// read cost and lexicographic order of the per-symbol bitmask encoding, so
/// the reported plan is the lexicographically smallest one of minimum cost.
/// Prefix mode restricts each read set to {0..beta-1} and walks beta vectors
/// only; it is an upper-bound heuristic and its results are never flagged
/// exhaustive.
struct SearchConfig {
  SearchMode mode = SearchMode::Exhaustive;
  std::optional<std::size_t> max_read;
  std::optional<std::uint64_t> max_plans;
  std::uint64_t seed = 0;  // shuffles visit order within a cost level, prefix mode only
};

struct SearchResult {
  ReadPlan best_plan;
  std::size_t best_cost = 0;
  bool exhaustive = false;
  std::uint64_t plans_checked = 0;
};

struct SearchProgress {
  std::uint64_t plans_checked = 0;
  std::size_t current_cost = 0;
  double plans_per_sec = 0.0;
};

using ProgressFn = std::function<void(const SearchProgress&)>;

/// Finds a minimum-read feasible plan (exhaustive mode) or a cheap prefix plan
/// (prefix mode). Exhaustive mode refuses instances with nI*ell > 24 unless
/// max_plans is set. Throws NoFeasiblePlan when the budget (max_read or
/// max_plans) is exhausted first; with no budget at all that cannot happen for
/// an MDS pair, since the full-read plan converts by re-encoding, and is
/// reported as InternalCheckFailed.
SearchResult min_read_search(const ConvertiblePair& pair, const SearchConfig& config,
                             const ProgressFn& progress = {});

struct AchievabilityReport {
  std::size_t best_cost = 0;
  Rat bound;
  Rat gap;  // best_cost - bound, >= 0 when the bound is sound
  Regime regime;
  bool conversions_ok = false;
  std::size_t messages_tested = 0;
};

/// Re-derives the transform for the found plan, converts random messages, and
/// compares the cost against the closed-form lower bound.
AchievabilityReport verify_achievability(const ConvertiblePair& pair,
                                         const SearchResult& result,
                                         std::size_t messages = 20,
                                         std::uint64_t seed = 0);

}  // namespace convertbw
