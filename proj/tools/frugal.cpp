// Command-line front end: winner determination, vulnerability reports,
// bribery solving with automatic algorithm selection, reduction generators
// and the brute-force oracles.
//
// Exit codes: 0 success (verify: all checks pass), 1 verification failure,
// 2 parse/validation error, 3 unsupported rule/solver combination,
// 4 limits exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "frugal/frugal.hpp"

namespace {

using nlohmann::json;
using namespace frugal;

int exit_code_for(const Error& err) {
  switch (err.code()) {
    case Errc::unsupported_rule:
      return 3;
    case Errc::limit_exceeded:
    case Errc::budget_too_large:
      return 4;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write '" + path + "'");
  out << text;
}

Variant parse_variant(const std::string& name) {
  if (name == "frugal") return Variant::frugal;
  if (name == "uniform") return Variant::dollar_uniform;
  if (name == "nonuniform") return Variant::dollar_nonuniform;
  fail(Errc::parse_error, "unknown variant '" + name + "'");
}

bool is_unweighted(const Election& e) {
  for (const Vote& v : e.votes)
    if (v.weight != 1) return false;
  return true;
}

// The algorithm-selection table printed by `solve --explain`.
const char* kSelectionTable =
    "frugal  unweighted  plurality|veto|kapproval|kveto|bucklin|runoff  -> poly (manipulation greedy)\n"
    "frugal  weighted    plurality                                     -> poly (retop vulnerable votes)\n"
    "frugal  weighted    maximin|copeland (3 candidates)               -> poly (margin subset-sum)\n"
    "dollar  unweighted  plurality                                     -> poly (cheapest flips)\n"
    "dollar  unweighted  veto                                          -> poly (min-cost veto reassignment)\n"
    "dollar  unweighted  kapproval|bucklin|runoff (budget <= 3)        -> poly (budgeted subsets)\n"
    "otherwise                                                         -> exact (bounded search)\n";

struct Chosen {
  Solution solution;
  std::string algorithm;
};

Chosen run_poly(const BriberyInstance& inst) {
  const bool unweighted = is_unweighted(inst.election);
  if (inst.variant == Variant::frugal) {
    if (unweighted) {
      switch (inst.rule.kind) {
        case RuleKind::plurality:
        case RuleKind::veto:
        case RuleKind::k_approval:
        case RuleKind::k_veto:
        case RuleKind::bucklin:
        case RuleKind::runoff:
          return {solve_frugal_poly(inst), "frugal-manipulation"};
        default:
          break;
      }
    }
    if (inst.rule.kind == RuleKind::plurality)
      return {solve_weighted_plurality_frugal(inst), "weighted-plurality-greedy"};
    if (inst.election.num_candidates() == 3 &&
        (inst.rule.kind == RuleKind::maximin || inst.rule.kind == RuleKind::copeland))
      return {solve_weighted_threecand(inst), "threecand-subset-sum"};
    fail(Errc::unsupported_rule, "no polynomial algorithm for this rule/variant");
  }
  if (!unweighted) fail(Errc::unsupported_rule, "no polynomial dollar algorithm for weighted votes");
  switch (inst.rule.kind) {
    case RuleKind::plurality:
      return {solve_dollar_plurality(inst), "dollar-plurality"};
    case RuleKind::veto:
      return {solve_dollar_veto(inst), "dollar-veto"};
    case RuleKind::k_approval:
    case RuleKind::bucklin:
    case RuleKind::runoff:
      return {solve_dollar_budgeted(inst), "dollar-budgeted"};
    default:
      fail(Errc::unsupported_rule, "no polynomial dollar algorithm for this rule");
  }
}

Chosen run_auto(const BriberyInstance& inst, SolveLimits limits) {
  const bool unweighted = is_unweighted(inst.election);
  const int m = inst.election.num_candidates();
  if (inst.variant == Variant::frugal) {
    if (unweighted) {
      switch (inst.rule.kind) {
        case RuleKind::plurality:
        case RuleKind::veto:
        case RuleKind::k_approval:
        case RuleKind::k_veto:
        case RuleKind::bucklin:
        case RuleKind::runoff:
          return run_poly(inst);
        default:
          break;
      }
    }
    if (inst.rule.kind == RuleKind::plurality) return run_poly(inst);
    if (m == 3 && (inst.rule.kind == RuleKind::maximin || inst.rule.kind == RuleKind::copeland))
      return run_poly(inst);
  } else if (unweighted) {
    switch (inst.rule.kind) {
      case RuleKind::plurality:
      case RuleKind::veto:
        return run_poly(inst);
      case RuleKind::k_approval:
      case RuleKind::bucklin:
      case RuleKind::runoff:
        if (*inst.budget <= 3) return run_poly(inst);
        break;
      default:
        break;
    }
  }
  return {solve_exact(inst, limits), "exact"};
}

json solution_json(const Solution& sol, const Election& e, const std::string& algorithm) {
  json j;
  j["decision"] = sol.yes ? "yes" : "no";
  j["algorithm"] = algorithm;
  if (sol.yes) {
    j["cost"] = sol.cost;
    json changes = json::array();
    for (const auto& [idx, ranking] : sol.changes) {
      std::string r;
      for (size_t i = 0; i < ranking.size(); ++i) {
        if (i) r += ">";
        r += e.candidates[ranking[i]];
      }
      changes.push_back({{"vote", idx}, {"ranking", r}});
    }
    j["witness"] = changes;
  }
  return j;
}

int cmd_verify(const std::string& name, const std::string& path, int k_or_l) {
  VerificationReport rep;
  if (name == "borda-x3c" || name == "kapproval-x3c" || name == "kveto-x3c" ||
      name == "scoring-x3c") {
    rep = verify_reduction(name, parse_x3c(slurp(path)), k_or_l);
  } else if (name == "wstv-quarter") {
    rep = verify_reduction(name, parse_partition(slurp(path), PartitionInstance::Kind::quarter));
  } else if (name == "uniform-borda-cm") {
    fail(Errc::parse_error, "verify uniform-borda-cm needs --target; use gen + solve instead");
  } else {
    rep = verify_reduction(name, parse_partition(slurp(path), PartitionInstance::Kind::half));
  }
  std::cout << serialize_report(rep);
  return rep.overall_pass() ? 0 : 1;
}

ReductionOutput generate(const std::string& name, const std::string& path, int k, int l,
                         const std::string& target, const std::string& alpha) {
  if (name == "borda-x3c") return gen_borda_x3c(parse_x3c(slurp(path)));
  if (name == "kapproval-x3c") return gen_kapproval_x3c(parse_x3c(slurp(path)), k > 0 ? k : 5);
  if (name == "kveto-x3c") return gen_kveto_x3c(parse_x3c(slurp(path)), k > 0 ? k : 3);
  if (name == "scoring-x3c") {
    const X3CInstance src = parse_x3c(slurp(path));
    const int f = 2 * static_cast<int>(src.universe.size());
    std::vector<long long> vec;
    for (int i = f - 1; i >= 0; --i) vec.push_back(i);
    const int use_l = l > 0 ? l : static_cast<int>(src.universe.size()) - 1;
    return gen_scoring_x3c(src, vec, use_l);
  }
  if (name == "uniform-borda-cm") {
    if (target.empty()) fail(Errc::parse_error, "gen uniform-borda-cm needs --target");
    return gen_uniform_borda_cm(parse_cm(slurp(path), target));
  }
  if (name == "wplurality-partition")
    return gen_wplurality_partition(parse_partition(slurp(path), PartitionInstance::Kind::half));
  if (name == "wmaximin-partition")
    return gen_wmaximin_partition(parse_partition(slurp(path), PartitionInstance::Kind::half));
  if (name == "wcopeland-partition") {
    long long num = 0, den = 1;
    if (!alpha.empty()) {
      const Rational r = parse_rule("copeland:" + alpha).alpha;
      num = r.num;
      den = r.den;
    }
    return gen_wcopeland_partition(parse_partition(slurp(path), PartitionInstance::Kind::half), num,
                                   den);
  }
  if (name == "wbucklin-partition")
    return gen_wbucklin_partition(parse_partition(slurp(path), PartitionInstance::Kind::half));
  if (name == "wstv-quarter")
    return gen_wstv_quarter(parse_partition(slurp(path), PartitionInstance::Kind::quarter));
  fail(Errc::unsupported_rule, "unknown reduction '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frugal bribery toolkit"};
  app.require_subcommand(1);

  std::string file, rule_text = "plurality", target, variant_text, out_base, alpha_text;
  std::string algorithm = "auto";
  std::optional<long long> budget;
  int max_m = 4, max_votes = 6, k_or_l = -1;
  bool as_json = false, explain = false;

  auto* winner_cmd = app.add_subcommand("winner", "compute the tie-broken winner");
  winner_cmd->add_option("file", file)->required();
  winner_cmd->add_option("--rule", rule_text);
  winner_cmd->add_flag("--json", as_json);

  auto* vul_cmd = app.add_subcommand("vulnerable", "label votes vulnerable/non-vulnerable");
  vul_cmd->add_option("file", file)->required();
  vul_cmd->add_option("--rule", rule_text);
  vul_cmd->add_option("--target", target)->required();
  vul_cmd->add_flag("--json", as_json);

  auto* solve_cmd = app.add_subcommand("solve", "decide a frugal bribery instance");
  solve_cmd->add_option("file", file);
  solve_cmd->add_option("--rule", rule_text);
  solve_cmd->add_option("--target", target);
  solve_cmd->add_option("--budget", budget);
  solve_cmd->add_option("--variant", variant_text);
  solve_cmd->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"exact", "poly", "auto"}));
  solve_cmd->add_option("--max-m", max_m);
  solve_cmd->add_option("--max-votes", max_votes);
  solve_cmd->add_flag("--json", as_json);
  solve_cmd->add_flag("--explain", explain);

  auto* gen_cmd = app.add_subcommand("gen", "generate a reduction instance");
  std::string reduction;
  gen_cmd->add_option("reduction", reduction)->required();
  gen_cmd->add_option("file", file)->required();
  gen_cmd->add_option("--k", k_or_l);
  gen_cmd->add_option("--l", k_or_l);
  gen_cmd->add_option("--target", target);
  gen_cmd->add_option("--alpha", alpha_text);
  gen_cmd->add_option("--out", out_base);

  auto* verify_cmd = app.add_subcommand("verify", "verify a reduction end to end");
  verify_cmd->add_option("reduction", reduction)->required();
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--k", k_or_l);
  verify_cmd->add_option("--l", k_or_l);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force source oracles");
  std::string oracle_kind;
  oracle_cmd->add_option("kind", oracle_kind)->required()->check(
      CLI::IsMember({"x3c", "partition", "quarter"}));
  oracle_cmd->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*winner_cmd) {
      const Election e = parse_election(slurp(file));
      const RuleSpec rule = parse_rule(rule_text);
      const int w = compute_winner(e, rule);
      if (as_json)
        std::cout << json{{"winner", e.candidates[w]}}.dump() << "\n";
      else
        std::cout << e.candidates[w] << "\n";
      return 0;
    }

    if (*vul_cmd) {
      const Election e = parse_election(slurp(file));
      const RuleSpec rule = parse_rule(rule_text);
      const int t = e.index_of(target);
      const std::vector<VoteLabel> labels = classify_vulnerable(e, rule, t);
      const int w = compute_winner(e, rule);
      if (as_json) {
        json j{{"winner", e.candidates[w]}, {"target", target}};
        json arr = json::array();
        for (const VoteLabel l : labels) arr.push_back(l == VoteLabel::vulnerable);
        j["vulnerable"] = arr;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "winner: " << e.candidates[w] << "\n";
        for (size_t i = 0; i < labels.size(); ++i)
          std::cout << "vote " << i << ": "
                    << (labels[i] == VoteLabel::vulnerable ? "vulnerable" : "non-vulnerable")
                    << "\n";
      }
      return 0;
    }

    if (*solve_cmd) {
      if (explain) {
        std::cout << kSelectionTable;
        return 0;
      }
      if (file.empty() || target.empty())
        fail(Errc::parse_error, "solve needs an election file and --target");
      const Election e = parse_election(slurp(file));
      const RuleSpec rule = parse_rule(rule_text);
      Variant variant = budget.has_value() ? Variant::dollar_nonuniform : Variant::frugal;
      if (!variant_text.empty()) variant = parse_variant(variant_text);
      const BriberyInstance inst =
          build_instance(e, rule, e.index_of(target), {}, budget, variant);
      const SolveLimits limits{max_m, max_votes};

      const auto t0 = std::chrono::steady_clock::now();
      Chosen chosen;
      if (algorithm == "exact")
        chosen = {solve_exact(inst, limits), "exact"};
      else if (algorithm == "poly")
        chosen = run_poly(inst);
      else
        chosen = run_auto(inst, limits);
      const auto t1 = std::chrono::steady_clock::now();
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

      if (!chosen.solution.yes ||
          check_solution(inst, chosen.solution).empty()) {
        // witness validated (or decision is no)
      } else {
        fail(Errc::internal_error, "solver returned an invalid witness");
      }

      if (as_json) {
        std::cout << solution_json(chosen.solution, inst.election, chosen.algorithm).dump()
                  << "\n";
      } else {
        std::cout << serialize_solution(chosen.solution, inst.election, chosen.algorithm);
        std::cout << "elapsed: " << us << "us\n";
      }
      return 0;
    }

    if (*gen_cmd) {
      const ReductionOutput out =
          generate(reduction, file, k_or_l, k_or_l, target, alpha_text);
      const std::string elec = serialize_election(out.instance.election);
      const std::string cert = serialize_certificate(out);
      if (out_base.empty()) {
        std::cout << elec << "---\n" << cert;
      } else {
        write_file(out_base + ".elec", elec);
        write_file(out_base + ".cert", cert);
        std::cout << "wrote " << out_base << ".elec and " << out_base << ".cert\n";
      }
      return 0;
    }

    if (*verify_cmd) return cmd_verify(reduction, file, k_or_l);

    if (*oracle_cmd) {
      if (oracle_kind == "x3c") {
        const X3CInstance src = parse_x3c(slurp(file));
        const auto cover = solve_x3c(src);
        std::cout << "decision: " << (cover ? "yes" : "no") << "\n";
        if (cover) {
          std::cout << "cover:";
          for (size_t i = 0; i < cover->size(); ++i) std::cout << (i ? "," : " ") << (*cover)[i];
          std::cout << "\n";
        }
      } else {
        const auto kind = oracle_kind == "partition" ? PartitionInstance::Kind::half
                                                     : PartitionInstance::Kind::quarter;
        const PartitionInstance src = parse_partition(slurp(file), kind);
        const auto subset = solve_partition(src);
        std::cout << "decision: " << (subset ? "yes" : "no") << "\n";
        if (subset) {
          std::cout << "subset:";
          for (size_t i = 0; i < subset->size(); ++i) std::cout << (i ? "," : " ") << (*subset)[i];
          std::cout << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
