#include "convertbw/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "convertbw/prng.hpp"

namespace convertbw {

namespace {

constexpr std::size_t kExhaustiveBitCap = 24;

std::vector<std::size_t> mask_to_set(std::uint32_t mask, std::size_t ell) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < ell; ++t) {
    if (mask >> t & 1u) out.push_back(t);
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const ConvertiblePair& pair, const SearchConfig& config,
             const ProgressFn& progress)
      : pair_(pair), config_(config), progress_(progress),
        n_(pair.params.nI()), ell_(pair.params.ell),
        start_(std::chrono::steady_clock::now()) {}

  SearchResult run() {
    std::size_t budget = std::min(config_.max_read.value_or(n_ * ell_), n_ * ell_);
    std::vector<std::uint32_t> masks(n_, 0);
    for (std::size_t cost = 0; cost <= budget; ++cost) {
      report_level(cost);
      if (config_.mode == SearchMode::Exhaustive) {
        if (walk_level(masks, 0, cost)) return finish(true);
      } else {
        if (prefix_level(cost)) return finish(false);
      }
      if (capped_) break;
    }
    if (capped_) {
      if (best_) return finish(false);  // cap interrupted a level scan
      throw NoFeasiblePlan("plan cap of " + std::to_string(*config_.max_plans) +
                           " reached before a feasible plan was found");
    }
    if (budget < n_ * ell_) {
      throw NoFeasiblePlan("no feasible plan with read cost <= " +
                           std::to_string(budget));
    }
    // Full read re-encodes from the complete message, so an MDS pair always
    // admits it; reaching this line means the feasibility test is broken.
    throw InternalCheckFailed("full-read plan reported infeasible");
  }

 private:
  bool check(const std::vector<std::uint32_t>& masks) {
    ++checked_;
    if (config_.max_plans && checked_ > *config_.max_plans) {
      capped_ = true;
      return false;
    }
    if ((checked_ & 0xFFFF) == 0) report_level(current_cost_);
    std::vector<std::vector<std::size_t>> d(n_);
    for (std::size_t j = 0; j < n_; ++j) d[j] = mask_to_set(masks[j], ell_);
    ReadPlan plan{std::move(d)};
    if (!check_feasible(pair_, plan).holds) return false;
    if (!best_ || lex_less(masks, best_masks_)) {
      best_ = plan;
      best_masks_ = masks;
    }
    return true;
  }

  static bool lex_less(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  // Depth-first over symbols, masks ascending: visits the level in
  // lexicographic encoding order, so the first hit is the lex-min plan.
  bool walk_level(std::vector<std::uint32_t>& masks, std::size_t j, std::size_t rem) {
    if (capped_) return false;
    if (j == n_) return rem == 0 && check(masks);
    std::size_t tail = (n_ - j - 1) * ell_;
    for (std::uint32_t m = 0; m < (1u << ell_); ++m) {
      std::size_t pc = static_cast<std::size_t>(std::popcount(m));
      if (pc > rem || rem - pc > tail) continue;
      masks[j] = m;
      if (walk_level(masks, j + 1, rem - pc)) return true;
      if (capped_) break;
    }
    masks[j] = 0;
    return false;
  }

  // Prefix mode: enumerate beta vectors summing to the level cost. The whole
  // level is scanned (visit order may be shuffled by the seed) and the lex-min
  // feasible plan kept, so the outcome does not depend on the seed unless the
  // plan cap interrupts a level.
  bool prefix_level(std::size_t cost) {
    std::vector<std::vector<std::uint32_t>> level;
    std::vector<std::uint32_t> masks(n_, 0);
    collect_prefix(masks, 0, cost, level);
    if (config_.seed != 0) {
      SplitMix64 rng(derive_seed(config_.seed, "search/shuffle", cost));
      for (std::size_t i = level.size(); i > 1; --i) {
        std::swap(level[i - 1], level[rng.below(i)]);
      }
    }
    bool found = false;
    for (const auto& cand : level) {
      if (capped_) break;
      found |= check(cand);
    }
    return found && !capped_;
  }

  void collect_prefix(std::vector<std::uint32_t>& masks, std::size_t j, std::size_t rem,
                      std::vector<std::vector<std::uint32_t>>& out) {
    if (j == n_) {
      if (rem == 0) out.push_back(masks);
      return;
    }
    std::size_t tail = (n_ - j - 1) * ell_;
    for (std::size_t beta = 0; beta <= std::min(rem, ell_); ++beta) {
      if (rem - beta > tail) continue;
      masks[j] = static_cast<std::uint32_t>((1u << beta) - 1);
      collect_prefix(masks, j + 1, rem - beta, out);
    }
    masks[j] = 0;
  }

  void report_level(std::size_t cost) {
    current_cost_ = cost;
    if (!progress_) return;
    auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_).count();
    progress_(SearchProgress{checked_, cost,
                             elapsed > 0 ? static_cast<double>(checked_) / elapsed : 0.0});
  }

  SearchResult finish(bool exhaustive_mode) {
    SearchResult res;
    res.best_plan = *best_;
    res.best_cost = res.best_plan.read_total();
    res.exhaustive = exhaustive_mode && !capped_;
    res.plans_checked = checked_;
    return res;
  }

  const ConvertiblePair& pair_;
  const SearchConfig& config_;
  const ProgressFn& progress_;
  std::size_t n_;
  std::size_t ell_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t checked_ = 0;
  std::size_t current_cost_ = 0;
  bool capped_ = false;
  std::optional<ReadPlan> best_;
  std::vector<std::uint32_t> best_masks_;
};

}  // namespace

SearchResult min_read_search(const ConvertiblePair& pair, const SearchConfig& config,
                             const ProgressFn& progress) {
  std::size_t bits = pair.params.nI() * pair.params.ell;
  if (config.mode == SearchMode::Exhaustive && bits > kExhaustiveBitCap &&
      !config.max_plans) {
    throw SpaceTooLarge("plan space has 2^" + std::to_string(bits) +
                        " assignments; use prefix mode or set a plan cap");
  }
  if (pair.params.ell > 20) throw SpaceTooLarge("ell too large for mask enumeration");
  return Enumerator(pair, config, progress).run();
}

AchievabilityReport verify_achievability(const ConvertiblePair& pair,
                                         const SearchResult& result,
                                         std::size_t messages, std::uint64_t seed) {
  std::optional<Transform> t = derive_transform(pair, result.best_plan);
  if (!t) {
    throw InternalCheckFailed("search returned an infeasible plan");
  }
  const CodeParams& prm = pair.params;
  const PrimeField field(prm.p);
  SplitMix64 rng(derive_seed(seed, "achievability/messages"));
  bool ok = true;
  for (std::size_t trial = 0; trial < messages; ++trial) {
    Message m(prm.kI() * prm.ell);
    for (auto& v : m) v = FieldElement{rng.below(prm.p)};
    auto finals = convert(pair, result.best_plan, *t, m);
    for (std::size_t i = 0; i < prm.lambda; ++i) {
      std::span<const FieldElement> segment(m.data() + i * prm.kF * prm.ell,
                                            prm.kF * prm.ell);
      if (finals[i] != encode_final(pair, segment)) ok = false;
    }
  }
  BoundResult bound = lower_bound(prm);
  AchievabilityReport rep;
  rep.best_cost = result.best_cost;
  rep.bound = bound.value;
  rep.gap = Rat(static_cast<long>(result.best_cost)) - bound.value;
  rep.regime = bound.regime;
  rep.conversions_ok = ok;
  rep.messages_tested = messages;
  return rep;
}

}  // namespace convertbw
