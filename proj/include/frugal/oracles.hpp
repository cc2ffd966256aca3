#pragma once
// Brute-force ground truth for the reduction sources (exact cover, the two
// partition variants, coalitional manipulation) and the end-to-end reduction
// verifier that replays every structural claim a generator makes.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "frugal/core.hpp"
#include "frugal/reductions.hpp"
#include "frugal/solvers.hpp"

namespace frugal {

// Exhaustive exact cover: the lexicographically first index set of size
// |U|/3 whose sets partition the universe, if any.
inline std::optional<std::vector<int>> solve_x3c(const X3CInstance& src) {
  check_x3c(src);
  const int m = static_cast<int>(src.universe.size());
  const int t = static_cast<int>(src.sets.size());
  const int want = m / 3;
  if (want > t) return std::nullopt;
  std::vector<int> idx(want);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> hit(m);
  while (true) {
    std::fill(hit.begin(), hit.end(), 0);
    bool ok = true;
    for (int i : idx)
      for (int x : src.sets[i])
        if (hit[x]++) ok = false;
    if (ok) return idx;
    int j = want - 1;
    while (j >= 0 && idx[j] == t - want + j) --j;
    if (j < 0) return std::nullopt;
    ++idx[j];
    for (int i = j + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Proper subset summing to the half / quarter target, lexicographically
// first by inclusion mask ordered low-index-first.
inline std::optional<std::vector<int>> solve_partition(const PartitionInstance& src) {
  check_partition(src);
  const long long target = partition_target(src);
  const int n = static_cast<int>(src.weights.size());
  if (n > 24) fail(Errc::limit_exceeded, "partition oracle is exponential; instance too large");
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (mask == full) continue;  // proper subset
    long long sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += src.weights[i];
    if (sum == target) {
      std::vector<int> out;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i);
      return out;
    }
  }
  return std::nullopt;
}

// Coalitional manipulation ground truth: the manipulators' votes must make
// the target the unique co-winner (no ties).  Exhaustive over vote tuples.
inline std::optional<std::vector<Ranking>> solve_cm_exact(const CmInstance& src,
                                                          const RuleSpec& rule) {
  check_cm(src);
  const int m = static_cast<int>(src.candidates.size());
  check_rule(rule, m);
  const std::vector<Ranking> all = detail::all_rankings(m);
  const long long r = static_cast<long long>(all.size());
  double space = 1;
  for (int i = 0; i < src.manipulators; ++i) space *= static_cast<double>(r);
  if (space > 2e7) fail(Errc::limit_exceeded, "manipulation oracle search space too large");

  Election e;
  e.candidates = src.candidates;
  for (int c = 0; c < m; ++c) e.tiebreak.push_back(c);
  for (const Ranking& v : src.truthful) e.votes.push_back({v, 1, Price()});
  for (int i = 0; i < src.manipulators; ++i) e.votes.push_back({all[0], 1, Price()});

  const int base = static_cast<int>(src.truthful.size());
  std::vector<int> pick(src.manipulators, 0);
  while (true) {
    for (int i = 0; i < src.manipulators; ++i) e.votes[base + i].ranking = all[pick[i]];
    const std::vector<int> winners = detail::co_winners(e, rule);
    if (winners.size() == 1 && winners[0] == src.target) {
      std::vector<Ranking> out;
      for (int i = 0; i < src.manipulators; ++i) out.push_back(all[pick[i]]);
      return out;
    }
    int j = src.manipulators - 1;
    while (j >= 0 && pick[j] == r - 1) pick[j--] = 0;
    if (j < 0) return std::nullopt;
    ++pick[j];
  }
}

// ---------------------------------------------------------------------------
// Reduction verification

enum class CheckStatus { pass, failed, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct VerificationReport {
  std::string reduction;
  bool source_yes = false;
  std::vector<CheckResult> checks;

  bool overall_pass() const {
    for (const CheckResult& c : checks)
      if (c.status == CheckStatus::failed) return false;
    return true;
  }
};

namespace detail {

// Reverse checks are attempted only while the brute-force search stays
// within ~24 bits: #vulnerable * log2(m!) <= 24.
inline bool exact_within_caps(const BriberyInstance& inst) {
  const int m = inst.election.num_candidates();
  const int v = static_cast<int>(
      vulnerable_indices(classify_vulnerable(inst.election, inst.rule, inst.target)).size());
  double log_fact = 0;
  for (int i = 2; i <= m; ++i) log_fact += std::log2(static_cast<double>(i));
  return v * log_fact <= 24.0;
}

inline void add_check(VerificationReport& rep, const std::string& name, bool ok,
                      const std::string& detail = "") {
  rep.checks.push_back({name, ok ? CheckStatus::pass : CheckStatus::failed, detail});
}

inline void run_common_checks(VerificationReport& rep, const ReductionOutput& out,
                              bool source_yes, const std::vector<int>& selection,
                              const std::vector<Ranking>& cm_solution) {
  const BriberyInstance& inst = out.instance;
  rep.source_yes = source_yes;

  const int winner = compute_winner(inst.election, inst.rule);
  add_check(rep, "pre_winner", winner == out.expected_winner,
            "winner " + inst.election.candidates[winner]);

  const std::vector<int> vul =
      vulnerable_indices(classify_vulnerable(inst.election, inst.rule, inst.target));
  add_check(rep, "vulnerable_set", vul == out.expected_vulnerable,
            std::to_string(vul.size()) + " vulnerable votes");

  if (out.score_relations.empty()) {
    rep.checks.push_back({"score_relations", CheckStatus::skipped, "no positional relations"});
  } else {
    bool ok = true;
    const std::vector<long long> s = scores_of(inst.election, inst.rule);
    for (const ScoreRelation& r : out.score_relations) {
      const long long d = s[r.a] - s[r.b];
      if ((r.exact && d != r.diff) || (!r.exact && d < r.diff)) ok = false;
    }
    add_check(rep, "score_relations", ok,
              std::to_string(out.score_relations.size()) + " relations");
  }

  if (!source_yes) {
    rep.checks.push_back({"forward_witness", CheckStatus::skipped, "source is a no-instance"});
  } else {
    Solution fwd;
    if (out.forward_from_selection)
      fwd = out.forward_from_selection(selection);
    else
      fwd = out.forward_from_rankings(cm_solution);
    const std::vector<std::string> bad = check_solution(inst, fwd);
    add_check(rep, "forward_witness", bad.empty(), bad.empty() ? "witness valid" : bad.front());
  }

  if (!exact_within_caps(inst)) {
    rep.checks.push_back({"reverse_equivalence", CheckStatus::skipped, "search space over caps"});
  } else {
    const int m = inst.election.num_candidates();
    SolveLimits limits{m, 64};
    const Solution sol = solve_exact(inst, limits);
    add_check(rep, "reverse_equivalence", sol.yes == source_yes,
              sol.yes ? "instance solvable" : "instance unsolvable");
  }
}

}  // namespace detail

inline VerificationReport verify_reduction(const std::string& name, const X3CInstance& src,
                                           int k_or_l = -1) {
  VerificationReport rep;
  rep.reduction = name;
  ReductionOutput out;
  if (name == "borda-x3c") {
    out = gen_borda_x3c(src);
  } else if (name == "kapproval-x3c") {
    out = gen_kapproval_x3c(src, k_or_l > 0 ? k_or_l : 5);
  } else if (name == "kveto-x3c") {
    out = gen_kveto_x3c(src, k_or_l > 0 ? k_or_l : 3);
  } else if (name == "scoring-x3c") {
    const int f = 2 * static_cast<int>(src.universe.size());
    std::vector<long long> borda_vec;
    for (int i = f - 1; i >= 0; --i) borda_vec.push_back(i);
    const int l = k_or_l > 0 ? k_or_l : static_cast<int>(src.universe.size()) - 1;
    out = gen_scoring_x3c(src, borda_vec, l);
  } else {
    fail(Errc::unsupported_rule, "unknown x3c reduction '" + name + "'");
  }
  const auto cover = solve_x3c(src);
  detail::run_common_checks(rep, out, cover.has_value(), cover.value_or(std::vector<int>{}), {});
  return rep;
}

inline VerificationReport verify_reduction(const std::string& name,
                                           const PartitionInstance& src) {
  VerificationReport rep;
  rep.reduction = name;
  ReductionOutput out;
  if (name == "wplurality-partition") {
    out = gen_wplurality_partition(src);
  } else if (name == "wmaximin-partition") {
    out = gen_wmaximin_partition(src);
  } else if (name == "wcopeland-partition") {
    out = gen_wcopeland_partition(src);
  } else if (name == "wbucklin-partition") {
    out = gen_wbucklin_partition(src);
  } else if (name == "wstv-quarter") {
    out = gen_wstv_quarter(src);
  } else {
    fail(Errc::unsupported_rule, "unknown partition reduction '" + name + "'");
  }
  const auto subset = solve_partition(src);
  detail::run_common_checks(rep, out, subset.has_value(), subset.value_or(std::vector<int>{}), {});
  return rep;
}

inline VerificationReport verify_reduction(const std::string& name, const CmInstance& src) {
  VerificationReport rep;
  rep.reduction = name;
  if (name != "uniform-borda-cm") fail(Errc::unsupported_rule, "unknown cm reduction '" + name + "'");
  ReductionOutput out = gen_uniform_borda_cm(src);
  const auto manip = solve_cm_exact(src, RuleSpec::borda());
  detail::run_common_checks(rep, out, manip.has_value(), {}, manip.value_or(std::vector<Ranking>{}));
  return rep;
}

}  // namespace frugal
