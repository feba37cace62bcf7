#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "convertbw/bounds.hpp"
#include "convertbw/io.hpp"
#include "convertbw/lp.hpp"
#include "convertbw/parallel.hpp"
#include "convertbw/prng.hpp"
#include "convertbw/search.hpp"

using json = nlohmann::json;
using namespace convertbw;

namespace {

constexpr const char* kSchema = "convertbw/1";

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

json rat_json(const Rat& r) {
  return json{{"num", to_int64(r.num())}, {"den", to_int64(r.den())}};
}

std::string rat_str(const Rat& r) {
  return r.num().get_str() + "/" + r.den().get_str();
}

struct CommonOpts {
  bool json_out = false;
};

struct ParamFlags {
  std::size_t lambda = 0, kF = 0, rF = 0, rI = 0, ell = 0;
  std::uint64_t p = 2;

  void add_to(CLI::App* cmd, bool with_p_default) {
    cmd->add_option("--lambda", lambda, "number of final codewords (>= 2)")->required();
    cmd->add_option("--kF", kF, "final code dimension in symbols")->required();
    cmd->add_option("--rF", rF, "final code parity symbols")->required();
    cmd->add_option("--rI", rI, "initial code parity symbols")->required();
    cmd->add_option("--ell", ell, "subsymbols per symbol")->required();
    auto* popt = cmd->add_option("--p", p, "prime field modulus");
    if (!with_p_default) popt->required();
  }

  CodeParams validate() const { return validate_params(lambda, kF, rF, rI, ell, p); }
};

json params_json(const CodeParams& p) {
  return json{{"lambda", p.lambda}, {"kF", p.kF}, {"rF", p.rF}, {"rI", p.rI},
              {"ell", p.ell},       {"p", p.p},   {"kI", p.kI()}, {"nI", p.nI()},
              {"nF", p.nF()}};
}

// ---------------------------------------------------------------------------
// verify-example

class CheckList {
 public:
  explicit CheckList(bool json_out) : json_out_(json_out) {}

  bool check(const std::string& name, bool pass, const std::string& detail = "") {
    if (json_out_) {
      checks_.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
    } else {
      std::cout << (pass ? "ok   " : "FAIL ") << name;
      if (!detail.empty()) std::cout << "  (" << detail << ")";
      std::cout << "\n";
    }
    if (!pass && first_failure_.empty()) first_failure_ = name;
    all_pass_ &= pass;
    return pass;
  }

  int finish(const std::string& command) {
    if (json_out_) {
      json doc{{"schema", kSchema}, {"command", command}, {"checks", checks_},
               {"pass", all_pass_}};
      if (!all_pass_) doc["first_failure"] = first_failure_;
      std::cout << doc.dump(1) << "\n";
    } else if (all_pass_) {
      std::cout << "PASS\n";
    } else {
      std::cout << "FAIL: first failing check: " << first_failure_ << "\n";
    }
    return all_pass_ ? kExitPass : kExitCheckFailure;
  }

 private:
  bool json_out_;
  json checks_ = json::array();
  bool all_pass_ = true;
  std::string first_failure_;
};

int cmd_verify_example(const std::string& data_dir, const CommonOpts& opts) {
  CheckList checks(opts.json_out);
  ExampleFixture fx = load_example_fixture(std::filesystem::path(data_dir) / "worked_example");
  const CodeParams& prm = fx.pair.params;

  checks.check("fixture checksum", fx.checksum == kExampleFixtureChecksum);

  bool b_subsets = is_mds_by_subsets(prm.nI(), prm.kI(), prm.ell, fx.pair.B);
  checks.check("initial parity is MDS (all symbol subsets)", b_subsets);
  checks.check("initial parity is MDS (block superregularity)",
               is_mds_systematic(prm.nI(), prm.kI(), prm.ell, fx.pair.B) == b_subsets &&
                   b_subsets);
  bool c_subsets = is_mds_by_subsets(prm.nF(), prm.kF, prm.ell, fx.pair.C);
  checks.check("final parity is MDS", c_subsets &&
               is_mds_systematic(prm.nF(), prm.kF, prm.ell, fx.pair.C));

  RestrictedMatrices rm = build_restricted(fx.pair, fx.plan);
  checks.check("restricted shapes",
               rm.B_restricted.rows() == 16 && rm.B_restricted.cols() == 8 &&
                   rm.C_restricted.rows() == 16 && rm.C_restricted.cols() == 8);

  FeasibilityReport rep = check_feasible(fx.pair, fx.plan);
  checks.check("inclusion holds", rep.holds);
  checks.check("ranks are 8 and 8", rep.rank_B == 8 && rep.rank_C == 8);
  checks.check("reverse inclusion holds (spaces coincide)",
               column_space_contains(rm.C_restricted, rm.B_restricted));
  checks.check("restricted initial generator has full column rank", rep.B_full_col_rank);

  checks.check("witness matrix is invertible", is_invertible(fx.witness));
  checks.check("witness solves C~ E = B~",
               multiply(rm.C_restricted, fx.witness) == rm.B_restricted);

  auto transform = derive_transform(fx.pair, fx.plan);
  bool converted = false;
  if (transform) {
    converted = true;
    SplitMix64 rng(derive_seed(2024, "verify-example/messages"));
    for (int trial = 0; trial < 100 && converted; ++trial) {
      Message m(prm.kI() * prm.ell);
      for (auto& v : m) v = FieldElement{rng.below(prm.p)};
      auto finals = convert(fx.pair, fx.plan, *transform, m);
      for (std::size_t i = 0; i < prm.lambda; ++i) {
        std::span<const FieldElement> seg(m.data() + i * prm.kF * prm.ell,
                                          prm.kF * prm.ell);
        if (finals[i] != encode_final(fx.pair, seg)) converted = false;
      }
    }
  }
  checks.check("transform derived", transform.has_value());
  checks.check("100 random conversions match direct encodings", converted);

  CostReport cost_rep = cost(fx.plan, prm);
  BoundResult bound = bound_thm3(prm);
  checks.check("read cost is 8", cost_rep.read == 8);
  checks.check("write cost is 8", cost_rep.write == 8);
  checks.check("bound regime", bound.regime == Regime::Thm3Case1,
               regime_name(bound.regime));
  checks.check("read cost equals the bound exactly",
               bound.value == Rat(static_cast<long>(cost_rep.read)));
  auto lp_sol = solve(thm3_problem(prm));
  checks.check("independent linear-program optimum agrees",
               lp_sol && lp_sol->value == bound.value);

  return checks.finish("verify-example");
}

// ---------------------------------------------------------------------------
// bound

int cmd_bound(const ParamFlags& flags, const std::string& which, bool lp_check,
              const CommonOpts& opts) {
  CodeParams prm = flags.validate();
  BoundResult res = [&] {
    if (which == "auto") return lower_bound(prm);
    if (which == "thm1") return bound_thm1(prm);
    if (which == "thm2") return bound_thm2(prm);
    if (which == "thm3") return bound_thm3(prm);
    return bound_prior(prm);
  }();

  std::optional<LpSolution> oracle;
  bool oracle_agrees = true;
  if (lp_check) {
    if (which == "prior") {
      throw BadParams("--lp-check does not apply to the prior bound");
    }
    oracle = solve(oracle_problem(prm));
    oracle_agrees = oracle.has_value() && oracle->value == res.value;
  }

  if (opts.json_out) {
    json doc{{"schema", kSchema},          {"command", "bound"},
             {"params", params_json(prm)}, {"regime", regime_name(res.regime)},
             {"value", rat_json(res.value)}, {"ceiling", to_int64(res.ceiling)}};
    if (lp_check) {
      doc["lp_check"] = json{{"agrees", oracle_agrees}};
      if (oracle) {
        doc["lp_check"]["x"] = rat_json(oracle->x);
        doc["lp_check"]["y"] = rat_json(oracle->y);
        doc["lp_check"]["value"] = rat_json(oracle->value);
      }
    }
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << "regime  " << regime_name(res.regime) << "\n"
              << "value   " << rat_str(res.value) << " subsymbols\n"
              << "ceiling " << res.ceiling.get_str() << "\n";
    if (lp_check) {
      std::cout << "oracle  "
                << (oracle ? rat_str(oracle->value) + (oracle_agrees ? "  (agrees)" : "  (DISAGREES)")
                           : std::string("infeasible"))
                << "\n";
    }
  }
  return oracle_agrees ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const std::string& grid_spec, const std::string& out_path,
                const CommonOpts& opts) {
  std::vector<CodeParams> grid = expand_grid(parse_grid_spec(grid_spec));
  std::vector<Comparison> rows(grid.size(), Comparison{Rat(0), Rat(0), Rat(0), false,
                                                       Regime::Thm1, Regime::PriorLow});
  parallel_for(grid.size(), [&](std::size_t i) { rows[i] = compare(grid[i]); });

  std::size_t strict = 0, negative = 0;
  std::string csv = "lambda,kF,rF,rI,ell,regime,ours_num,ours_den,prior_num,prior_den,"
                    "delta_num,delta_den\n";
  json json_rows = json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const CodeParams& p = grid[i];
    const Comparison& c = rows[i];
    if (c.strict) ++strict;
    if (c.delta < Rat(0)) ++negative;
    csv += std::to_string(p.lambda) + "," + std::to_string(p.kF) + "," +
           std::to_string(p.rF) + "," + std::to_string(p.rI) + "," +
           std::to_string(p.ell) + "," + regime_name(c.ours_regime) + "," +
           c.ours.num().get_str() + "," + c.ours.den().get_str() + "," +
           c.prior.num().get_str() + "," + c.prior.den().get_str() + "," +
           c.delta.num().get_str() + "," + c.delta.den().get_str() + "\n";
    if (opts.json_out) {
      json_rows.push_back(json::array(
          {p.lambda, p.kF, p.rF, p.rI, p.ell, regime_name(c.ours_regime),
           to_int64(c.ours.num()), to_int64(c.ours.den()), to_int64(c.prior.num()),
           to_int64(c.prior.den()), to_int64(c.delta.num()), to_int64(c.delta.den())}));
    }
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << csv;
  }

  if (opts.json_out) {
    json doc{{"schema", kSchema},      {"command", "compare"},
             {"grid", grid_spec},      {"tuples", grid.size()},
             {"columns", "lambda,kF,rF,rI,ell,regime,ours_num,ours_den,prior_num,"
                         "prior_den,delta_num,delta_den"},
             {"rows", json_rows},
             {"strict_improvements", strict}, {"negative_deltas", negative}};
    if (!out_path.empty()) doc["out"] = out_path;
    std::cout << doc.dump(1) << "\n";
  } else {
    if (out_path.empty()) std::cout << csv;
    std::cerr << "checked " << grid.size() << " tuples; strict improvements " << strict
              << "; negative deltas " << negative << "\n";
  }
  // A negative delta would contradict the dominance analysis.
  return negative == 0 ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// verify-plan

int cmd_verify_plan(const std::string& code_path, const std::string& plan_path,
                    const std::string& derive_out, const CommonOpts& opts) {
  ConvertiblePair pair = load_code_file(code_path);
  ReadPlan plan = load_plan_file(plan_path, pair.params);

  FeasibilityReport rep = check_feasible(pair, plan);
  CostReport cost_rep = cost(plan, pair.params);
  BoundResult bound = lower_bound(pair.params);
  Rat gap = Rat(static_cast<long>(cost_rep.read)) - bound.value;

  if (rep.holds && !derive_out.empty()) {
    auto t = derive_transform(pair, plan);
    if (!t) throw InternalCheckFailed("inclusion holds but no transform found");
    save_matrix_file(derive_out, t->T);
  }

  if (opts.json_out) {
    json doc{{"schema", kSchema},
             {"command", "verify-plan"},
             {"params", params_json(pair.params)},
             {"feasible", rep.holds},
             {"rank_B", rep.rank_B},
             {"rank_C", rep.rank_C},
             {"B_full_col_rank", rep.B_full_col_rank},
             {"read", cost_rep.read},
             {"write", cost_rep.write},
             {"total", cost_rep.total},
             {"bound", rat_json(bound.value)},
             {"bound_regime", regime_name(bound.regime)},
             {"read_minus_bound", rat_json(gap)}};
    if (rep.holds && !derive_out.empty()) doc["transform_written"] = derive_out;
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << (rep.holds ? "feasible" : "infeasible")
              << "  rank_B " << rep.rank_B << "  rank_C " << rep.rank_C
              << "  full_col_rank " << (rep.B_full_col_rank ? "yes" : "no") << "\n"
              << "read " << cost_rep.read << "  write " << cost_rep.write << "  total "
              << cost_rep.total << "\n"
              << "bound " << rat_str(bound.value) << " (" << regime_name(bound.regime)
              << ")  read - bound = " << rat_str(gap) << "\n";
    if (rep.holds && !derive_out.empty()) {
      std::cout << "transform written to " << derive_out << "\n";
    }
  }
  return rep.holds ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const std::string& code_path, const std::string& mode,
               std::optional<std::size_t> max_read, std::optional<std::uint64_t> max_plans,
               std::uint64_t seed, bool quiet, const CommonOpts& opts) {
  ConvertiblePair pair = load_code_file(code_path);
  SearchConfig cfg;
  cfg.mode = mode == "prefix" ? SearchMode::PrefixOnly : SearchMode::Exhaustive;
  cfg.max_read = max_read;
  cfg.max_plans = max_plans;
  cfg.seed = seed;

  ProgressFn progress;
  if (!quiet) {
    progress = [](const SearchProgress& p) {
      std::cerr << "\rcost frontier " << p.current_cost << "  plans " << p.plans_checked
                << "  (" << static_cast<std::uint64_t>(p.plans_per_sec) << "/s)   "
                << std::flush;
    };
  }
  SearchResult res = min_read_search(pair, cfg, progress);
  if (!quiet) std::cerr << "\n";

  AchievabilityReport rep = verify_achievability(pair, res, 20, seed);

  json plan_sets = json::array();
  for (const auto& set : res.best_plan.D) plan_sets.push_back(set);
  json doc{{"schema", kSchema},
           {"command", "search"},
           {"mode", mode},
           {"best_cost", res.best_cost},
           {"exhaustive", res.exhaustive},
           {"plans_checked", res.plans_checked},
           {"best_plan", json{{"D", plan_sets}}},
           {"bound", rat_json(rep.bound)},
           {"bound_regime", regime_name(rep.regime)},
           {"gap", rat_json(rep.gap)},
           {"conversions_ok", rep.conversions_ok},
           {"messages_tested", rep.messages_tested}};
  if (opts.json_out) {
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << "best_cost " << res.best_cost << (res.exhaustive ? " (exhaustive minimum)" : " (heuristic)")
              << "  plans_checked " << res.plans_checked << "\n"
              << "bound " << rat_str(rep.bound) << " (" << regime_name(rep.regime)
              << ")  gap " << rat_str(rep.gap) << "\n"
              << "conversions " << (rep.conversions_ok ? "ok" : "FAILED") << " on "
              << rep.messages_tested << " messages\n"
              << "plan " << json{{"D", plan_sets}}.dump() << "\n";
  }
  return rep.conversions_ok ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// gen-code

int cmd_gen_code(const ParamFlags& flags, std::uint64_t seed, std::size_t max_attempts,
                 const std::string& out_path, const CommonOpts& opts) {
  CodeParams prm = flags.validate();
  ConvertiblePair pair = random_mds_pair(prm, seed, max_attempts);
  save_code_file(out_path, pair);
  if (opts.json_out) {
    std::cout << json{{"schema", kSchema}, {"command", "gen-code"},
                      {"params", params_json(prm)}, {"seed", seed}, {"out", out_path}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << "wrote MDS pair to " << out_path << " (seed " << seed << ")\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "convertbw: exact models, feasibility tests, bandwidth bounds and plan search\n"
      "for converting one systematic MDS array code into several smaller ones.\n"
      "All symbol and subsymbol indices in files and reports are 0-based\n"
      "(1-based notation found in the literature maps by subtracting 1)."};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_flag("--json", common.json_out, "machine-readable JSON on stdout");
  auto add_json_flag = [&common](CLI::App* cmd) {
    cmd->add_flag("--json", common.json_out, "machine-readable JSON on stdout");
  };

  std::string data_dir = CONVERTBW_DATA_DIR;

  auto* verify_example =
      app.add_subcommand("verify-example", "run the bundled worked example end to end");
  verify_example->add_option("--data-dir", data_dir, "directory holding worked_example/");
  add_json_flag(verify_example);

  auto* bound = app.add_subcommand("bound", "evaluate a read-bandwidth lower bound");
  ParamFlags bound_flags;
  bound_flags.add_to(bound, true);
  std::string which = "auto";
  bound->add_option("--which", which, "auto|thm1|thm2|thm3|prior")
      ->check(CLI::IsMember({"auto", "thm1", "thm2", "thm3", "prior"}));
  bool lp_check = false;
  bound->add_flag("--lp-check", lp_check, "cross-check against the vertex-enumeration oracle");
  add_json_flag(bound);

  auto* compare_cmd = app.add_subcommand("compare", "sweep a grid against the prior bound");
  std::string grid_spec = "lambda=2..4,kF=1..6,rF=1..6,rI=1..12,ell=1,2,4";
  std::string out_path;
  compare_cmd->add_option("--grid", grid_spec, "axes, e.g. lambda=2..3,kF=1..6,rF=1..6,rI=1..12,ell=1,2,4");
  compare_cmd->add_option("--out", out_path, "write the CSV here instead of stdout");
  add_json_flag(compare_cmd);

  auto* verify_plan = app.add_subcommand("verify-plan", "check a read plan against a code");
  std::string code_path, plan_path, derive_out;
  verify_plan->add_option("--code", code_path, "code JSON file")->required();
  verify_plan->add_option("--plan", plan_path, "plan JSON file")->required();
  verify_plan->add_option("--derive", derive_out, "write the derived transform here");
  add_json_flag(verify_plan);

  auto* search_cmd = app.add_subcommand("search", "find a minimum-read feasible plan");
  std::string search_code, mode = "exhaustive";
  std::optional<std::size_t> max_read;
  std::optional<std::uint64_t> max_plans;
  std::uint64_t seed = 0;
  bool quiet = false;
  search_cmd->add_option("--code", search_code, "code JSON file")->required();
  search_cmd->add_option("--mode", mode, "exhaustive|prefix")
      ->check(CLI::IsMember({"exhaustive", "prefix"}));
  search_cmd->add_option("--max-read", max_read, "prune plans reading more than this");
  search_cmd->add_option("--max-plans", max_plans, "stop after checking this many plans");
  search_cmd->add_option("--seed", seed, "shuffle seed for prefix mode");
  search_cmd->add_flag("--quiet", quiet, "suppress progress on stderr");
  add_json_flag(search_cmd);

  auto* gen_code = app.add_subcommand("gen-code", "write a random MDS pair fixture");
  ParamFlags gen_flags;
  gen_flags.add_to(gen_code, false);
  std::uint64_t gen_seed = 0;
  std::size_t max_attempts = 1000;
  std::string gen_out;
  gen_code->add_option("--seed", gen_seed, "generator seed")->required();
  gen_code->add_option("--max-attempts", max_attempts, "rejection-sampling budget");
  gen_code->add_option("--out", gen_out, "output code JSON file")->required();
  add_json_flag(gen_code);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_example->parsed()) return cmd_verify_example(data_dir, common);
    if (bound->parsed()) return cmd_bound(bound_flags, which, lp_check, common);
    if (compare_cmd->parsed()) return cmd_compare(grid_spec, out_path, common);
    if (verify_plan->parsed())
      return cmd_verify_plan(code_path, plan_path, derive_out, common);
    if (search_cmd->parsed())
      return cmd_search(search_code, mode, max_read, max_plans, seed, quiet, common);
    if (gen_code->parsed())
      return cmd_gen_code(gen_flags, gen_seed, max_attempts, gen_out, common);
  } catch (const GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const NoFeasiblePlan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const InternalCheckFailed& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const CaseConflict& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const IdentityViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const SpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // bad params, regimes, files, grids, indices, dimensions
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
