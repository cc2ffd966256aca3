#pragma once
// Instance generators for the hardness reductions: exact-cover gadgets for
// Borda / k-approval / k-veto / flat scoring rules, the uniform-price Borda
// construction from coalitional manipulation, and the partition gadgets for
// weighted plurality-$, maximin, Copeland, Bucklin and STV.  Every generator
// returns the bribery instance together with a certificate: the map from
// source objects to vote indices, the expected winner and vulnerable set,
// the exact score relations the construction promises, and a forward
// witness builder.

#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "frugal/core.hpp"
#include "frugal/solvers.hpp"
#include "frugal/vulnerability.hpp"

namespace frugal {

struct X3CInstance {
  std::vector<std::string> universe;     // |U| divisible by 3
  std::vector<std::array<int, 3>> sets;  // indices into universe, each set sorted
};

inline void check_x3c(const X3CInstance& src) {
  const int m = static_cast<int>(src.universe.size());
  if (m == 0 || m % 3 != 0) fail(Errc::parse_error, "universe size must be a positive multiple of 3");
  if (src.sets.empty()) fail(Errc::parse_error, "at least one set required");
  for (size_t i = 0; i < src.universe.size(); ++i)
    for (size_t j = i + 1; j < src.universe.size(); ++j)
      if (src.universe[i] == src.universe[j]) fail(Errc::parse_error, "duplicate universe element");
  for (const auto& s : src.sets) {
    if (!(s[0] < s[1] && s[1] < s[2])) fail(Errc::parse_error, "sets must list three distinct sorted elements");
    for (int x : s)
      if (x < 0 || x >= m) fail(Errc::parse_error, "set element out of range");
  }
}

struct PartitionInstance {
  enum class Kind { half, quarter };
  std::vector<long long> weights;
  Kind kind = Kind::half;
};

inline void check_partition(const PartitionInstance& src) {
  if (src.weights.empty()) fail(Errc::parse_error, "empty weight multiset");
  long long total = 0;
  for (long long w : src.weights) {
    if (w <= 0) fail(Errc::parse_error, "weights must be positive");
    total += w;
  }
  const int div = src.kind == PartitionInstance::Kind::half ? 2 : 4;
  if (total % div != 0)
    fail(Errc::parse_error, "weight total must be divisible by " + std::to_string(div));
}

inline long long partition_target(const PartitionInstance& src) {
  long long total = 0;
  for (long long w : src.weights) total += w;
  return total / (src.kind == PartitionInstance::Kind::half ? 2 : 4);
}

struct CmInstance {
  std::vector<std::string> candidates;
  std::vector<Ranking> truthful;
  int manipulators = 0;
  int target = 0;
};

inline void check_cm(const CmInstance& src) {
  const int m = static_cast<int>(src.candidates.size());
  if (m < 1) fail(Errc::parse_error, "empty candidate set");
  if (src.truthful.empty()) fail(Errc::parse_error, "at least one truthful vote required");
  if (src.manipulators < 0) fail(Errc::parse_error, "negative manipulator count");
  if (src.target < 0 || src.target >= m) fail(Errc::unknown_target, "target out of range");
  std::vector<char> seen(m);
  for (const Ranking& r : src.truthful) {
    if (static_cast<int>(r.size()) != m) fail(Errc::incomplete_ranking, "truthful vote incomplete");
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : r) {
      if (c < 0 || c >= m || seen[c]) fail(Errc::parse_error, "truthful vote is not a permutation");
      seen[c] = 1;
    }
  }
}

// ---------------------------------------------------------------------------
// Score realization (rotation blocks with one adjacent swap at a unit gap)

struct ScoreRealization {
  std::vector<Vote> votes;
  long long lambda = 0;  // named candidate i ends at lambda + X_i, dummies strictly below
};

namespace detail {

inline int first_unit_gap(const std::vector<long long>& alpha) {
  for (size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] - alpha[i + 1] == 1) return static_cast<int>(i) + 1;  // 1-based
  return -1;
}

// One block of |alpha| cyclic-rotation votes over `order` = (loser, gainer,
// rest...), with the loser/gainer swap applied in the rotation where the
// loser sits at the unit-gap position.  Net effect: gainer +1, loser -1,
// everyone else equal.
inline void emit_block(std::vector<Vote>& out, const std::vector<int>& order, int gap_pos) {
  const int m = static_cast<int>(order.size());
  for (int r = 0; r < m; ++r) {
    Ranking v(m);
    for (int j = 0; j < m; ++j) v[j] = order[((j - r) % m + m) % m];
    if (r == gap_pos - 1) std::swap(v[gap_pos - 1], v[gap_pos]);
    out.push_back({std::move(v), 1, Price()});
  }
}

}  // namespace detail

// Emits votes under which named candidate i scores exactly lambda + X_i and
// every dummy scores at most lambda - dummy_gap.  alpha must be a normalized
// score vector covering all named and dummy candidates.
inline ScoreRealization realize_scores(const std::vector<std::pair<int, long long>>& named,
                                       const std::vector<int>& dummies,
                                       const std::vector<long long>& alpha,
                                       long long dummy_gap = 1) {
  if (dummies.empty()) fail(Errc::empty_dummy_set, "score realization needs a dummy candidate");
  if (named.empty()) fail(Errc::condition_violated, "score realization needs a named candidate");
  if (dummy_gap < 1) fail(Errc::condition_violated, "dummy gap must be at least 1");
  const int total = static_cast<int>(named.size() + dummies.size());
  if (static_cast<int>(alpha.size()) != total)
    fail(Errc::invalid_rule, "score vector length must cover named plus dummy candidates");
  const int gap_pos = detail::first_unit_gap(alpha);
  if (gap_pos < 0) fail(Errc::condition_violated, "score vector has no unit gap");

  std::vector<char> seen(total, 0);
  for (const auto& [c, x] : named) {
    (void)x;
    if (c < 0 || c >= total || seen[c]) fail(Errc::parse_error, "bad named candidate");
    seen[c] = 1;
  }
  for (int d : dummies) {
    if (d < 0 || d >= total || seen[d]) fail(Errc::parse_error, "bad dummy candidate");
    seen[d] = 1;
  }

  const int m = static_cast<int>(named.size());
  const int pivot = dummies.front();
  long long sum_x = 0, sum_abs = 0;
  for (const auto& [c, x] : named) {
    (void)c;
    sum_x += x;
    sum_abs += std::llabs(x);
  }
  // nu suppression rounds: dummies other than the pivot sit at lambda - nu,
  // the pivot at lambda - nu - sum_x - nu*m
  long long nu = std::max<long long>(1, dummy_gap);
  while (nu * (m + 1) + sum_x < dummy_gap) ++nu;

  auto rest_for = [&](int a, int b) {
    std::vector<int> order{a, b};
    for (int c = 0; c < total; ++c)
      if (c != a && c != b) order.push_back(c);
    return order;
  };

  ScoreRealization out;
  for (const auto& [c, x] : named) {
    for (long long j = 0; j < std::llabs(x); ++j) {
      if (x > 0)
        detail::emit_block(out.votes, rest_for(pivot, c), gap_pos);  // c gains, pivot loses
      else
        detail::emit_block(out.votes, rest_for(c, pivot), gap_pos);  // pivot gains, c loses
    }
  }
  for (long long r = 0; r < nu; ++r)
    for (const auto& [c, x] : named) {
      (void)x;
      detail::emit_block(out.votes, rest_for(pivot, c), gap_pos);
    }

  long long alpha_sum = 0;
  for (long long a : alpha) alpha_sum += a;
  const long long blocks = sum_abs + nu * m;
  out.lambda = blocks * alpha_sum + nu;
  return out;
}

// ---------------------------------------------------------------------------
// Reduction outputs

struct ScoreRelation {
  int a = 0, b = 0;
  long long diff = 0;  // expected s(a) - s(b); exact or a lower bound
  bool exact = true;
};

struct ReductionOutput {
  std::string name;
  BriberyInstance instance;
  std::vector<int> source_votes;       // source object index -> vote index
  std::vector<int> expected_vulnerable;
  int expected_winner = -1;
  std::vector<ScoreRelation> score_relations;
  std::optional<long long> lambda;
  std::function<Solution(const std::vector<int>&)> forward_from_selection;
  std::function<Solution(const std::vector<Ranking>&)> forward_from_rankings;
};

namespace detail {

inline std::vector<long long> scores_of(const Election& e, const RuleSpec& rule) {
  return positional_scores(e, score_vector_for(rule, e.num_candidates()));
}

struct OffsetPlan {
  std::vector<std::pair<int, long long>> named;  // X offsets, minimum zero
  long long gap = 1;                             // dummy suppression depth
};

// Turns target score differences relative to p into realize_scores inputs.
// rel[y] is the required final s(y) - s(p); every dummy must end at least
// dummy_margin below p's final score.
inline OffsetPlan plan_offsets(const std::vector<int>& namelist,
                               const std::vector<long long>& rel,
                               const std::vector<long long>& base, int p,
                               const std::vector<int>& dummies, long long dummy_margin) {
  auto raw = [&](int y) { return rel[y] - (base[y] - base[p]); };
  long long shift = raw(namelist.front());
  for (int y : namelist) shift = std::min(shift, raw(y));
  OffsetPlan plan;
  for (int y : namelist) plan.named.push_back({y, raw(y) - shift});
  const long long xp = raw(p) - shift;
  for (int d : dummies) plan.gap = std::max(plan.gap, base[d] - base[p] - xp + dummy_margin);
  return plan;
}

inline void assert_relations(const ReductionOutput& out) {
  if (out.score_relations.empty()) return;
  const std::vector<long long> s = scores_of(out.instance.election, out.instance.rule);
  for (const ScoreRelation& r : out.score_relations) {
    const long long d = s[r.a] - s[r.b];
    if ((r.exact && d != r.diff) || (!r.exact && d < r.diff))
      fail(Errc::internal_error, "generator violated its own score relation");
  }
}

// The construction promises this exact vulnerable set; mismatch is a
// generator bug.
inline void expect_exact_vulnerable(ReductionOutput& out, std::vector<int> expected) {
  std::sort(expected.begin(), expected.end());
  const std::vector<int> computed = vulnerable_indices(
      classify_vulnerable(out.instance.election, out.instance.rule, out.instance.target));
  if (computed != expected)
    fail(Errc::internal_error, out.name + ": vulnerable set differs from the construction's claim");
  out.expected_vulnerable = std::move(expected);
}

// The construction promises the source votes are vulnerable and every other
// vulnerable vote carries an infinite price (so only the sources are
// purchasable).
inline void expect_vulnerable_sources_purchasable(ReductionOutput& out) {
  const std::vector<int> computed = vulnerable_indices(
      classify_vulnerable(out.instance.election, out.instance.rule, out.instance.target));
  std::vector<char> is_source(out.instance.election.num_votes(), 0);
  for (int i : out.source_votes) is_source[i] = 1;
  std::vector<char> is_vul(out.instance.election.num_votes(), 0);
  for (int i : computed) is_vul[i] = 1;
  for (int i : out.source_votes)
    if (!is_vul[i]) fail(Errc::internal_error, out.name + ": source vote not vulnerable");
  for (int i : computed)
    if (!is_source[i] && !out.instance.election.votes[i].price.is_infinite())
      fail(Errc::internal_error, out.name + ": non-source vulnerable vote is purchasable");
  out.expected_vulnerable = computed;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Borda / X3C (frugal, no prices)

inline ReductionOutput gen_borda_x3c(const X3CInstance& src) {
  check_x3c(src);
  const int m = static_cast<int>(src.universe.size());
  const int t = static_cast<int>(src.sets.size());

  // layout: U = 0..m-1, D = m..6m-1, p, c, z
  const int nd = 5 * m;
  const int p = m + nd, c = p + 1, z = p + 2;
  const int M = 6 * m + 3;

  Election e;
  for (const std::string& u : src.universe) e.candidates.push_back("u" + u);
  for (int i = 1; i <= nd; ++i) e.candidates.push_back("d" + std::to_string(i));
  e.candidates.push_back("p");
  e.candidates.push_back("c");
  e.candidates.push_back("z");

  e.tiebreak.push_back(p);
  for (int i = 0; i < M; ++i)
    if (i != p) e.tiebreak.push_back(i);

  // disjoint dummy blocks; the second block has size m so that every
  // universe candidate ends exactly one point above p
  const int s1 = 4 * m / 3 - 2, s2 = m, s3 = m - 2, s4 = 5 * m / 3 - 1;
  std::vector<int> d1, d2, d3, d4;
  int at = m;
  for (int i = 0; i < s1; ++i) d1.push_back(at++);
  for (int i = 0; i < s2; ++i) d2.push_back(at++);
  for (int i = 0; i < s3; ++i) d3.push_back(at++);
  for (int i = 0; i < s4; ++i) d4.push_back(at++);

  auto in_set = [&](const std::array<int, 3>& s, int x) {
    return x == s[0] || x == s[1] || x == s[2];
  };

  ReductionOutput out;
  out.name = "borda-x3c";
  std::vector<Ranking> set_vote1(t);
  for (int i = 0; i < t; ++i) {
    const auto& s = src.sets[i];
    Ranking v1;
    v1.push_back(p);
    for (int d = m; d < m + nd; ++d) v1.push_back(d);
    for (int x = 0; x < m; ++x)
      if (!in_set(s, x)) v1.push_back(x);
    v1.push_back(c);
    v1.push_back(z);
    for (int x : s) v1.push_back(x);
    Ranking v2(v1.rbegin(), v1.rend());
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({v1, 1, Price()});
    e.votes.push_back({std::move(v2), 1, Price()});
    set_vote1[i] = std::move(v1);
  }
  {
    Ranking mu1{z, c};
    for (int d : d1) mu1.push_back(d);
    mu1.push_back(p);
    for (int d : d2) mu1.push_back(d);
    for (int x = 0; x < m; ++x) mu1.push_back(x);
    std::vector<char> used(M, 0);
    for (int x : mu1) used[x] = 1;
    for (int x = 0; x < M; ++x)
      if (!used[x]) mu1.push_back(x);
    e.votes.push_back({std::move(mu1), 1, Price()});

    Ranking mu2;
    for (int x = m - 1; x >= 0; --x) mu2.push_back(x);
    for (int d : d3) mu2.push_back(d);
    mu2.push_back(c);
    mu2.push_back(p);
    for (int d : d4) mu2.push_back(d);
    mu2.push_back(z);
    std::fill(used.begin(), used.end(), 0);
    for (int x : mu2) used[x] = 1;
    for (int x = 0; x < M; ++x)
      if (!used[x]) mu2.push_back(x);
    e.votes.push_back({std::move(mu2), 1, Price()});
  }

  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::borda(), p, std::nullopt, Variant::frugal};
  out.expected_winner = c;
  out.score_relations.push_back({c, p, 4 * m / 3, true});
  out.score_relations.push_back({p, z, m / 3, true});
  for (int x = 0; x < m; ++x) out.score_relations.push_back({x, p, -1, true});
  for (int d = m; d < m + nd; ++d) out.score_relations.push_back({p, d, 1, false});
  detail::expect_exact_vulnerable(out, out.source_votes);

  const std::vector<int> source_votes = out.source_votes;
  const std::vector<std::array<int, 3>> sets = src.sets;
  out.forward_from_selection = [source_votes, sets, p, c, z, m, nd](const std::vector<int>& cover) {
    Solution sol;
    sol.yes = true;
    for (int i : cover) {
      Ranking v;
      v.push_back(p);
      for (int d = m; d < m + nd; ++d) v.push_back(d);
      for (int x = 0; x < m; ++x)
        if (x != sets[i][0] && x != sets[i][1] && x != sets[i][2]) v.push_back(x);
      v.push_back(z);
      for (int x : sets[i]) v.push_back(x);
      v.push_back(c);
      sol.changes.push_back({source_votes[i], std::move(v)});
    }
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sol;
  };
  detail::assert_relations(out);
  return out;
}

// ---------------------------------------------------------------------------
// k-approval / X3C (dollar, prices 1 or infinite)

inline ReductionOutput gen_kapproval_x3c(const X3CInstance& src, int k) {
  check_x3c(src);
  if (k < 5) fail(Errc::condition_violated, "the k-approval reduction needs k >= 5");
  const int m = static_cast<int>(src.universe.size());
  const int t = static_cast<int>(src.sets.size());
  const int p = m + k - 1, q = p + 1;
  const int M = m + k + 1;

  Election e;
  for (const std::string& u : src.universe) e.candidates.push_back("u" + u);
  for (int i = 1; i < k; ++i) e.candidates.push_back("d" + std::to_string(i));
  e.candidates.push_back("p");
  e.candidates.push_back("q");

  e.tiebreak = {p, q};
  for (int i = 0; i < p; ++i) e.tiebreak.push_back(i);

  ReductionOutput out;
  out.name = "kapproval-x3c";
  for (int i = 0; i < t; ++i) {
    Ranking v{p, q};
    for (int x : src.sets[i]) v.push_back(x);
    for (int d = m; d < m + k - 1; ++d) v.push_back(d);
    for (int x = 0; x < m; ++x)
      if (x != src.sets[i][0] && x != src.sets[i][1] && x != src.sets[i][2]) v.push_back(x);
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({std::move(v), 1, Price::finite(1)});
  }

  // enforce s(q) = s(p) + m/3, s(x) = s(p) + 1, dummies at least m/3 + 1 below p
  {
    Election base = e;
    check_election(base);
    const std::vector<long long> bs = detail::scores_of(base, RuleSpec::k_approval(k));
    std::vector<long long> rel(M, 0);
    rel[q] = m / 3;
    for (int x = 0; x < m; ++x) rel[x] = 1;
    std::vector<int> namelist{p, q};
    for (int x = 0; x < m; ++x) namelist.push_back(x);
    std::vector<int> dummies;
    for (int d = m; d < m + k - 1; ++d) dummies.push_back(d);
    const detail::OffsetPlan plan = detail::plan_offsets(namelist, rel, bs, p, dummies, m / 3 + 1);
    std::vector<long long> alpha(M, 0);
    for (int i = 0; i < k; ++i) alpha[i] = 1;
    ScoreRealization gadget = realize_scores(plan.named, dummies, alpha, plan.gap);
    for (Vote& v : gadget.votes) {
      v.price = Price::infinite();
      e.votes.push_back(std::move(v));
    }
    out.lambda = gadget.lambda;
  }

  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::k_approval(k), p,
                                 static_cast<long long>(m / 3), Variant::dollar_nonuniform};
  check_instance(out.instance);
  out.expected_winner = q;
  out.score_relations.push_back({q, p, m / 3, true});
  for (int x = 0; x < m; ++x) out.score_relations.push_back({x, p, 1, true});
  for (int d = m; d < m + k - 1; ++d) out.score_relations.push_back({p, d, m / 3 + 1, false});
  detail::expect_vulnerable_sources_purchasable(out);

  const std::vector<int> source_votes = out.source_votes;
  out.forward_from_selection = [source_votes, p, q, m, k, M](const std::vector<int>& cover) {
    Solution sol;
    sol.yes = true;
    for (int i : cover) {
      Ranking v;
      v.push_back(p);
      for (int d = m; d < m + k - 1; ++d) v.push_back(d);
      for (int x = 0; x < m; ++x) v.push_back(x);
      v.push_back(q);
      if (static_cast<int>(v.size()) != M) fail(Errc::internal_error, "bad forward ranking");
      sol.changes.push_back({source_votes[i], std::move(v)});
      sol.cost += 1;
    }
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sol;
  };
  detail::assert_relations(out);
  return out;
}

// ---------------------------------------------------------------------------
// k-veto / X3C (dollar, prices 1 or infinite)

inline ReductionOutput gen_kveto_x3c(const X3CInstance& src, int k) {
  check_x3c(src);
  if (k < 3) fail(Errc::condition_violated, "the k-veto reduction needs k >= 3");
  const int m = static_cast<int>(src.universe.size());
  const int t = static_cast<int>(src.sets.size());
  // layout: U, Q (k-3), p, a1 a2 a3, d
  const int nq = k - 3;
  const int p = m + nq;
  const int a1 = p + 1, a2 = p + 2, a3 = p + 3, d = p + 4;
  const int M = m + k + 2;

  Election e;
  for (const std::string& u : src.universe) e.candidates.push_back("u" + u);
  for (int i = 1; i <= nq; ++i) e.candidates.push_back("q" + std::to_string(i));
  e.candidates.push_back("p");
  e.candidates.push_back("a1");
  e.candidates.push_back("a2");
  e.candidates.push_back("a3");
  e.candidates.push_back("d");

  e.tiebreak = {a1, a2, a3};
  for (int x = 0; x < m; ++x) e.tiebreak.push_back(x);
  for (int i = m; i < m + nq; ++i) e.tiebreak.push_back(i);
  e.tiebreak.push_back(d);
  e.tiebreak.push_back(p);

  ReductionOutput out;
  out.name = "kveto-x3c";
  for (int i = 0; i < t; ++i) {
    Ranking v{p};
    for (int x = 0; x < m; ++x)
      if (x != src.sets[i][0] && x != src.sets[i][1] && x != src.sets[i][2]) v.push_back(x);
    v.push_back(a1);
    v.push_back(a2);
    v.push_back(a3);
    v.push_back(d);
    for (int x : src.sets[i]) v.push_back(x);
    for (int j = m; j < m + nq; ++j) v.push_back(j);
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({std::move(v), 1, Price::finite(1)});
  }

  {
    Election base = e;
    check_election(base);
    const std::vector<long long> bs = detail::scores_of(base, RuleSpec::k_veto(k));
    std::vector<long long> rel(M, 0);
    for (int x = 0; x < m; ++x) rel[x] = -2;
    for (int j = m; j < m + nq; ++j) rel[j] = -1;
    rel[a1] = rel[a2] = rel[a3] = m / 3 - 1;
    std::vector<int> namelist{p, a1, a2, a3};
    for (int x = 0; x < m; ++x) namelist.push_back(x);
    for (int j = m; j < m + nq; ++j) namelist.push_back(j);
    const detail::OffsetPlan plan = detail::plan_offsets(namelist, rel, bs, p, {d}, 1);
    std::vector<long long> alpha(M, 0);
    for (int i = 0; i < M - k; ++i) alpha[i] = 1;  // normalized k-veto
    ScoreRealization gadget = realize_scores(plan.named, {d}, alpha, plan.gap);
    for (Vote& v : gadget.votes) {
      v.price = Price::infinite();
      e.votes.push_back(std::move(v));
    }
    out.lambda = gadget.lambda;
  }

  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::k_veto(k), p,
                                 static_cast<long long>(m / 3), Variant::dollar_nonuniform};
  check_instance(out.instance);
  out.expected_winner = a1;
  for (int ai : {a1, a2, a3}) out.score_relations.push_back({ai, p, m / 3 - 1, true});
  for (int x = 0; x < m; ++x) out.score_relations.push_back({p, x, 2, true});
  for (int j = m; j < m + nq; ++j) out.score_relations.push_back({p, j, 1, true});
  out.score_relations.push_back({p, d, 1, false});
  detail::expect_vulnerable_sources_purchasable(out);

  const std::vector<int> source_votes = out.source_votes;
  out.forward_from_selection = [source_votes, p, a1, a2, a3, d, m, nq](const std::vector<int>& cover) {
    Solution sol;
    sol.yes = true;
    for (int i : cover) {
      Ranking v;
      for (int x = 0; x < m; ++x) v.push_back(x);
      v.push_back(p);
      v.push_back(d);
      v.push_back(a1);
      v.push_back(a2);
      v.push_back(a3);
      for (int j = m; j < m + nq; ++j) v.push_back(j);
      sol.changes.push_back({source_votes[i], std::move(v)});
      sol.cost += 1;
    }
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sol;
  };
  detail::assert_relations(out);
  return out;
}

// ---------------------------------------------------------------------------
// Flat scoring rules / X3C (dollar, prices 1 or infinite)

// First position l (1-based) such that the normalized vector has unit gaps
// at l..l+3, or -1.
inline int find_unit_run(const std::vector<long long>& normalized) {
  const int f = static_cast<int>(normalized.size());
  for (int l = 1; l + 4 <= f; ++l) {
    bool ok = true;
    for (int i = l; i <= l + 3; ++i)
      if (normalized[i - 1] - normalized[i] != 1) ok = false;
    if (ok) return l;
  }
  return -1;
}

// vec is the rule's score vector for f(|U|) candidates; l locates the run of
// four equal unit gaps the gadget rides on (positions l..l+3 of the
// normalized vector).
inline ReductionOutput gen_scoring_x3c(const X3CInstance& src, std::vector<long long> vec, int l) {
  check_x3c(src);
  const int m = static_cast<int>(src.universe.size());
  const int t = static_cast<int>(src.sets.size());
  std::vector<long long> alpha;
  try {
    alpha = normalize_score_vector(std::move(vec));
  } catch (const Error&) {
    fail(Errc::condition_violated, "score vector cannot be normalized");
  }
  const int f = static_cast<int>(alpha.size());
  if (f < 2 * m) fail(Errc::condition_violated, "score vector shorter than 2|U|");
  if (l < 1 || l + 4 > f) fail(Errc::condition_violated, "gap run out of range");
  for (int i = l; i <= l + 3; ++i)
    if (alpha[i - 1] - alpha[i] != 1)
      fail(Errc::condition_violated, "no run of four unit gaps at the requested position");
  if (l < m - 1) fail(Errc::condition_violated, "gap run too early to fit the universe head");

  // layout: U, Q (f-m-3), p, a, d; head = p, d, U \ S_i, leading Q；
  // the block a > x > y > z starts at position l+1
  const int nqq = f - m - 3;
  const int p = m + nqq, a = p + 1, d = p + 2;
  const int head_q = l - m + 1;  // Q members inside the head
  if (head_q > nqq) fail(Errc::condition_violated, "gap run too late for the candidate count");

  Election e;
  for (const std::string& u : src.universe) e.candidates.push_back("u" + u);
  for (int i = 1; i <= nqq; ++i) e.candidates.push_back("q" + std::to_string(i));
  e.candidates.push_back("p");
  e.candidates.push_back("a");
  e.candidates.push_back("d");

  for (int i = 0; i < f; ++i)
    if (i != p) e.tiebreak.push_back(i);
  e.tiebreak.push_back(p);

  ReductionOutput out;
  out.name = "scoring-x3c";
  for (int i = 0; i < t; ++i) {
    Ranking v{p, d};
    for (int x = 0; x < m; ++x)
      if (x != src.sets[i][0] && x != src.sets[i][1] && x != src.sets[i][2]) v.push_back(x);
    for (int j = 0; j < head_q; ++j) v.push_back(m + j);
    v.push_back(a);
    for (int x : src.sets[i]) v.push_back(x);
    for (int j = head_q; j < nqq; ++j) v.push_back(m + j);
    if (static_cast<int>(v.size()) != f) fail(Errc::internal_error, "bad scoring vote layout");
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({std::move(v), 1, Price::finite(1)});
  }

  {
    Election base = e;
    check_election(base);
    const std::vector<long long> bs = positional_scores(base, alpha);
    std::vector<long long> rel(f, 0);
    for (int x = 0; x < m; ++x) rel[x] = -2;
    for (int j = m; j < m + nqq; ++j) rel[j] = -1;
    rel[a] = m / 3 - 1;
    std::vector<int> namelist{p, a};
    for (int x = 0; x < m; ++x) namelist.push_back(x);
    for (int j = m; j < m + nqq; ++j) namelist.push_back(j);
    const detail::OffsetPlan plan = detail::plan_offsets(namelist, rel, bs, p, {d}, 1);
    ScoreRealization gadget = realize_scores(plan.named, {d}, alpha, plan.gap);
    for (Vote& v : gadget.votes) {
      v.price = Price::infinite();
      e.votes.push_back(std::move(v));
    }
    out.lambda = gadget.lambda;
  }

  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::scoring(alpha), p,
                                 static_cast<long long>(m / 3), Variant::dollar_nonuniform};
  check_instance(out.instance);
  out.expected_winner = a;
  out.score_relations.push_back({a, p, m / 3 - 1, true});
  for (int x = 0; x < m; ++x) out.score_relations.push_back({p, x, 2, true});
  for (int j = m; j < m + nqq; ++j) out.score_relations.push_back({p, j, 1, true});
  out.score_relations.push_back({p, d, 1, false});
  detail::expect_vulnerable_sources_purchasable(out);

  const std::vector<int> source_votes = out.source_votes;
  const std::vector<std::array<int, 3>> sets = src.sets;
  out.forward_from_selection = [source_votes, sets, p, a, d, m, nqq, head_q](
                                   const std::vector<int>& cover) {
    Solution sol;
    sol.yes = true;
    for (int i : cover) {
      Ranking v{p, d};
      for (int x = 0; x < m; ++x)
        if (x != sets[i][0] && x != sets[i][1] && x != sets[i][2]) v.push_back(x);
      for (int j = 0; j < head_q; ++j) v.push_back(m + j);
      for (int x : sets[i]) v.push_back(x);
      v.push_back(a);
      for (int j = head_q; j < nqq; ++j) v.push_back(m + j);
      sol.changes.push_back({source_votes[i], std::move(v)});
      sol.cost += 1;
    }
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return sol;
  };
  detail::assert_relations(out);
  return out;
}

// ---------------------------------------------------------------------------
// Uniform-price Borda bribery from coalitional manipulation

namespace detail {

// Mirror vote pair granting +1 to `up` and -1 to `down` relative to every
// other candidate.  Layouts keep p near the middle and never place q
// immediately after p.
inline std::pair<Ranking, Ranking> score_pair_votes(int M, int up, int down, int p, int q) {
  std::vector<int> others;  // everyone except p, q and the pivot (down or up partner)
  const int partner = (up == p || up == q) ? down : (down == p || down == q) ? up : -1;
  auto is_member = [&](int c) { return c == up || c == down; };
  for (int c = 0; c < M; ++c)
    if (c != p && c != q && !is_member(c)) others.push_back(c);

  std::vector<int> c1, rest;
  if (up == p || down == p) {
    // p is a pair member; the member slots sit mid-vote
    const int want = M / 2 - 1;
    c1.push_back(q);
    size_t oi = 0;
    while (static_cast<int>(c1.size()) < want && oi < others.size()) c1.push_back(others[oi++]);
    if (static_cast<int>(c1.size()) != want) fail(Errc::internal_error, "pair layout underflow");
    while (oi < others.size()) rest.push_back(others[oi++]);
  } else if (up == q || down == q) {
    // q is a pair member: open with the pair, tuck p into the tail block
    const int j = std::max<long long>(2, (M - 2) / 2);  // p's 1-based index within rest
    size_t oi = 0;
    for (int i = 1; static_cast<int>(rest.size()) < j - 1; ++i) {
      (void)i;
      if (oi >= others.size()) fail(Errc::internal_error, "pair layout underflow");
      rest.push_back(others[oi++]);
    }
    rest.push_back(p);
    while (oi < others.size()) rest.push_back(others[oi++]);
  } else {
    // neither member involves p or q: p closes C1, q opens it
    const int want = (M + 2) / 2;
    c1.push_back(q);
    size_t oi = 0;
    while (static_cast<int>(c1.size()) < want - 1 && oi < others.size()) c1.push_back(others[oi++]);
    if (static_cast<int>(c1.size()) != want - 1) fail(Errc::internal_error, "pair layout underflow");
    c1.push_back(p);
    while (oi < others.size()) rest.push_back(others[oi++]);
  }
  (void)partner;

  Ranking v1 = c1;
  v1.push_back(up);
  v1.push_back(down);
  for (int c : rest) v1.push_back(c);
  Ranking v2(rest.rbegin(), rest.rend());
  v2.push_back(up);
  v2.push_back(down);
  for (auto it = c1.rbegin(); it != c1.rend(); ++it) v2.push_back(*it);

  for (const Ranking& v : {v1, v2}) {
    if (static_cast<int>(v.size()) != M) fail(Errc::internal_error, "pair vote wrong length");
    int pos_p = -1, pos_q = -1;
    for (int i = 0; i < M; ++i) {
      if (v[i] == p) pos_p = i + 1;
      if (v[i] == q) pos_q = i + 1;
    }
    if (pos_q == pos_p + 1) fail(Errc::internal_error, "q placed immediately after p");
    if (std::llabs(2LL * pos_p - (M + 1)) > 3)
      fail(Errc::internal_error, "p strayed from the middle of a pair vote");
  }
  return {std::move(v1), std::move(v2)};
}

}  // namespace detail

// Reduces two-manipulator Borda manipulation to uniform-price bribery with
// budget 2.  Rejects sources whose manipulation is already settled by the
// score spread (those never need the gadget).
inline ReductionOutput gen_uniform_borda_cm(const CmInstance& src) {
  check_cm(src);
  if (src.manipulators != 2)
    fail(Errc::condition_violated, "the construction requires exactly two manipulators");
  const int mc = static_cast<int>(src.candidates.size());
  if (mc < 3) fail(Errc::condition_violated, "the construction requires at least three candidates");
  const int M = mc + 2;
  const int p = src.target, d = mc, q = mc + 1;

  // source Borda scores
  std::vector<long long> s(mc, 0);
  for (const Ranking& r : src.truthful)
    for (int pos = 0; pos < mc; ++pos) s[r[pos]] += mc - 1 - pos;
  for (int x = 0; x < mc; ++x)
    if (x != p && s[x] - s[p] > 2 * mc - 3)
      fail(Errc::condition_violated, "source manipulation is trivially settled by the score spread");

  Election e;
  e.candidates = src.candidates;
  e.candidates.push_back("d*");
  e.candidates.push_back("q*");
  // q heads the tie-break so it wins the pre-bribery election; p stays last
  e.tiebreak.push_back(q);
  for (int c = 0; c < mc; ++c)
    if (c != p) e.tiebreak.push_back(c);
  e.tiebreak.push_back(d);
  e.tiebreak.push_back(p);

  ReductionOutput out;
  out.name = "uniform-borda-cm";
  for (const Ranking& r : src.truthful) {
    Ranking v = r;
    v.push_back(d);
    v.push_back(q);
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({std::move(v), 1, Price::finite(1)});
  }
  const int slot1 = static_cast<int>(e.votes.size());
  {
    Ranking nu;
    for (int c = 0; c < mc; ++c)
      if (c != p) nu.push_back(c);
    nu.push_back(d);
    nu.push_back(p);
    nu.push_back(q);
    e.votes.push_back({nu, 1, Price::finite(1)});
    e.votes.push_back({nu, 1, Price::finite(1)});
  }

  // required finals relative to p: x at s(x)-s(p)+2, q at 2mc-1 (the blocker
  // the two slot votes can just barely clear)
  {
    Election base = e;
    check_election(base);
    const std::vector<long long> bs = detail::scores_of(base, RuleSpec::borda());
    std::vector<long long> rel(M, 0);
    for (int x = 0; x < mc; ++x)
      if (x != p) rel[x] = s[x] - s[p] + 2;
    rel[q] = 2 * mc - 1;
    std::vector<int> namelist{p, q};
    for (int x = 0; x < mc; ++x)
      if (x != p) namelist.push_back(x);
    const detail::OffsetPlan plan = detail::plan_offsets(namelist, rel, bs, p, {d}, 2 * mc + 1);

    // all offsets are nonnegative after the shift, so every pair pushes d
    // down: named y gets X_y + nu pairs (y up, d down).  nu rounds keep d at
    // least 2mc + 1 below p: each round widens the p-d margin by r + 1.
    long long sum_x = 0, x_p = 0;
    for (const auto& [y, x] : plan.named) {
      sum_x += x;
      if (y == p) x_p = x;
    }
    const long long r = static_cast<long long>(plan.named.size());
    const long long deficit = (bs[d] - bs[p]) - sum_x - x_p + 2 * mc + 1;
    const long long nu_rounds = deficit > 0 ? (deficit + r) / (r + 1) : 0;
    for (const auto& [y, x] : plan.named)
      for (long long j = 0; j < x + nu_rounds; ++j) {
        auto [v1, v2] = detail::score_pair_votes(M, y, d, p, q);
        e.votes.push_back({std::move(v1), 1, Price::finite(1)});
        e.votes.push_back({std::move(v2), 1, Price::finite(1)});
      }
  }

  check_election(e);
  out.instance =
      BriberyInstance{std::move(e), RuleSpec::borda(), p, 2LL, Variant::dollar_uniform};
  check_instance(out.instance);
  out.expected_winner = q;
  out.score_relations.push_back({q, p, 2 * mc - 1, true});
  for (int x = 0; x < mc; ++x)
    if (x != p) out.score_relations.push_back({x, p, s[x] - s[p] + 2, true});
  out.score_relations.push_back({p, d, 2 * mc + 1, false});
  out.expected_vulnerable = vulnerable_indices(
      classify_vulnerable(out.instance.election, out.instance.rule, out.instance.target));
  {
    std::vector<char> is_vul(out.instance.election.num_votes(), 0);
    for (int i : out.expected_vulnerable) is_vul[i] = 1;
    if (!is_vul[slot1] || !is_vul[slot1 + 1])
      fail(Errc::internal_error, "manipulator slot votes must be vulnerable");
    for (int i : out.source_votes)
      if (!is_vul[i]) fail(Errc::internal_error, "lifted truthful votes must be vulnerable");
  }
  if (compute_winner(out.instance.election, out.instance.rule) != q)
    fail(Errc::internal_error, "uniform borda gadget failed to elect q");

  out.forward_from_rankings = [slot1, p, d, q, mc](const std::vector<Ranking>& manip) {
    if (manip.size() != 2) fail(Errc::parse_error, "expected two manipulator rankings");
    Solution sol;
    sol.yes = true;
    sol.cost = 2;
    for (int i = 0; i < 2; ++i) {
      Ranking v{p, d};
      for (int c : manip[i])
        if (c != p) v.push_back(c);
      v.push_back(q);
      if (static_cast<int>(v.size()) != mc + 2) fail(Errc::parse_error, "bad manipulator ranking");
      sol.changes.push_back({slot1 + i, std::move(v)});
    }
    return sol;
  };
  detail::assert_relations(out);
  return out;
}

// Coalitional manipulation embedded as zero-budget nonuniform bribery:
// manipulator slots vote p-first at price zero, every truthful vote costs 1.
inline BriberyInstance embed_cm_dollar(const CmInstance& src) {
  check_cm(src);
  const int mc = static_cast<int>(src.candidates.size());
  Election e;
  e.candidates = src.candidates;
  for (int c = 0; c < mc; ++c)
    if (c != src.target) e.tiebreak.push_back(c);
  e.tiebreak.push_back(src.target);  // p never wins ties: unique-win semantics
  for (const Ranking& r : src.truthful) e.votes.push_back({r, 1, Price::finite(1)});
  Ranking pfirst = detail::ranking_with_first(mc, src.target);
  for (int i = 0; i < src.manipulators; ++i) e.votes.push_back({pfirst, 1, Price::finite(0)});
  check_election(e);
  BriberyInstance inst{std::move(e), RuleSpec::borda(), src.target, 0LL,
                       Variant::dollar_nonuniform};
  check_instance(inst);
  return inst;
}

// ---------------------------------------------------------------------------
// Partition gadgets (weighted elections)

// Appends 2K to a half-partition multiset, turning target K into a quarter.
// A multiset containing 2K is a single-element instance, decided trivially.
inline PartitionInstance partition_to_quarter(const PartitionInstance& src) {
  if (src.kind != PartitionInstance::Kind::half)
    fail(Errc::parse_error, "expected a half-partition instance");
  check_partition(src);
  const long long k2 = 2 * partition_target(src);
  for (long long w : src.weights)
    if (w == k2)
      fail(Errc::trivial_instance, "weight multiset contains its own half-total; decided trivially");
  PartitionInstance out;
  out.kind = PartitionInstance::Kind::quarter;
  out.weights = src.weights;
  out.weights.push_back(k2);
  return out;
}

namespace detail {

inline ReductionOutput weighted_partition_common(const PartitionInstance& src,
                                                 const char* name) {
  check_partition(src);
  ReductionOutput out;
  out.name = name;
  return out;
}

}  // namespace detail

// Weighted plurality, dollar variant: one priced vote per weight.
inline ReductionOutput gen_wplurality_partition(const PartitionInstance& src) {
  ReductionOutput out = detail::weighted_partition_common(src, "wplurality-partition");
  if (src.kind != PartitionInstance::Kind::half) fail(Errc::parse_error, "expected half-partition");
  const long long k = partition_target(src);
  // candidates p=0, a=1, b=2
  Election e;
  e.candidates = {"p", "a", "b"};
  e.tiebreak = {1, 2, 0};  // a > b > p
  for (long long w : src.weights) {
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({{1, 0, 2}, w, Price::finite(w)});  // a > p > b
  }
  e.votes.push_back({{2, 0, 1}, 3 * k, Price()});                     // b > p > a
  e.votes.push_back({{0, 1, 2}, 2 * k + 1, Price::finite(2 * k + 1)});  // p > a > b
  check_election(e);
  out.instance =
      BriberyInstance{std::move(e), RuleSpec::plurality(), 0, k, Variant::dollar_nonuniform};
  check_instance(out.instance);
  out.expected_winner = 2;  // b
  {
    std::vector<int> expected = out.source_votes;
    expected.push_back(out.instance.election.num_votes() - 1);  // the p-top vote
    detail::expect_exact_vulnerable(out, std::move(expected));
  }
  const std::vector<int> source_votes = out.source_votes;
  const std::vector<long long> weights = src.weights;
  out.forward_from_selection = [source_votes, weights](const std::vector<int>& subset) {
    Solution sol;
    sol.yes = true;
    for (int i : subset) {
      sol.changes.push_back({source_votes[i], {0, 1, 2}});
      sol.cost += weights[i];
    }
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sol;
  };
  return out;
}

// Weighted maximin, frugal: p wins only when the rivals cycle with margin K.
inline ReductionOutput gen_wmaximin_partition(const PartitionInstance& src) {
  ReductionOutput out = detail::weighted_partition_common(src, "wmaximin-partition");
  if (src.kind != PartitionInstance::Kind::half) fail(Errc::parse_error, "expected half-partition");
  const long long k = partition_target(src);
  // candidates p=0, a=1, b=2, c=3
  Election e;
  e.candidates = {"p", "a", "b", "c"};
  e.tiebreak = {0, 1, 2, 3};
  for (long long w : src.weights) {
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({{0, 1, 2, 3}, w, Price()});  // p > a > b > c
  }
  e.votes.push_back({{3, 1, 2, 0}, k, Price()});  // c > a > b > p
  e.votes.push_back({{2, 3, 1, 0}, k, Price()});  // b > c > a > p
  e.votes.push_back({{1, 3, 2, 0}, k, Price()});  // a > c > b > p
  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::maximin(), 0, std::nullopt, Variant::frugal};
  out.expected_winner = 1;  // a
  detail::expect_exact_vulnerable(out, out.source_votes);
  const std::vector<int> source_votes = out.source_votes;
  const int nsrc = static_cast<int>(src.weights.size());
  out.forward_from_selection = [source_votes, nsrc](const std::vector<int>& subset) {
    std::vector<char> take(nsrc, 0);
    for (int i : subset) take[i] = 1;
    Solution sol;
    sol.yes = true;
    for (int i = 0; i < nsrc; ++i)
      if (!take[i]) sol.changes.push_back({source_votes[i], {0, 2, 3, 1}});  // p > b > c > a
    return sol;
  };
  return out;
}

// Weighted Copeland, frugal: p wins only when one rival pair ends tied.
inline ReductionOutput gen_wcopeland_partition(const PartitionInstance& src, long long alpha_num = 0,
                                               long long alpha_den = 1) {
  ReductionOutput out = detail::weighted_partition_common(src, "wcopeland-partition");
  if (src.kind != PartitionInstance::Kind::half) fail(Errc::parse_error, "expected half-partition");
  const Rational alpha = make_rational(alpha_num, alpha_den);
  if (alpha.num == alpha.den) fail(Errc::condition_violated, "the construction needs alpha < 1");
  const long long k = partition_target(src);
  // candidates p=0, a=1, b=2, c=3
  Election e;
  e.candidates = {"p", "a", "b", "c"};
  e.tiebreak = {1, 2, 3, 0};  // a > b > c > p
  for (long long w : src.weights) {
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({{0, 1, 2, 3}, w, Price()});  // p > a > b > c
  }
  e.votes.push_back({{1, 0, 2, 3}, k + 1, Price()});  // a > p > b > c
  e.votes.push_back({{3, 2, 1, 0}, k + 1, Price()});  // c > b > a > p
  check_election(e);
  RuleSpec rule = RuleSpec::copeland(alpha.num, alpha.den);
  out.instance = BriberyInstance{std::move(e), std::move(rule), 0, std::nullopt, Variant::frugal};
  out.expected_winner = 1;  // a
  detail::expect_exact_vulnerable(out, out.source_votes);
  const std::vector<int> source_votes = out.source_votes;
  const int nsrc = static_cast<int>(src.weights.size());
  out.forward_from_selection = [source_votes, nsrc](const std::vector<int>& subset) {
    std::vector<char> take(nsrc, 0);
    for (int i : subset) take[i] = 1;
    Solution sol;
    sol.yes = true;
    for (int i = 0; i < nsrc; ++i)
      sol.changes.push_back(
          {source_votes[i], take[i] ? Ranking{0, 3, 2, 1} : Ranking{0, 2, 3, 1}});
    return sol;
  };
  return out;
}

// Weighted Bucklin, frugal: p is stuck at depth three; the second positions
// of the changed votes must split the weight exactly.
inline ReductionOutput gen_wbucklin_partition(const PartitionInstance& src) {
  ReductionOutput out = detail::weighted_partition_common(src, "wbucklin-partition");
  if (src.kind != PartitionInstance::Kind::half) fail(Errc::parse_error, "expected half-partition");
  const long long k = partition_target(src);
  Election e;
  e.candidates = {"p", "a", "b", "c"};
  e.tiebreak = {0, 1, 2, 3};  // p > a > b > c
  for (long long w : src.weights) {
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({{0, 1, 2, 3}, w, Price()});  // p > a > b > c
  }
  e.votes.push_back({{1, 2, 0, 3}, k, Price()});  // a > b > p > c
  e.votes.push_back({{3, 2, 1, 0}, k, Price()});  // c > b > a > p
  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::bucklin(), 0, std::nullopt, Variant::frugal};
  out.expected_winner = 1;  // a
  detail::expect_exact_vulnerable(out, out.source_votes);
  const std::vector<int> source_votes = out.source_votes;
  const int nsrc = static_cast<int>(src.weights.size());
  out.forward_from_selection = [source_votes, nsrc](const std::vector<int>& subset) {
    std::vector<char> take(nsrc, 0);
    for (int i : subset) take[i] = 1;
    Solution sol;
    sol.yes = true;
    for (int i = 0; i < nsrc; ++i)
      if (!take[i]) sol.changes.push_back({source_votes[i], {0, 3, 2, 1}});  // p > c > b > a
    return sol;
  };
  return out;
}

// Weighted STV from quarter-partition: p survives the first round only when
// exactly K of the changeable weight defects to b.
inline ReductionOutput gen_wstv_quarter(const PartitionInstance& src) {
  ReductionOutput out = detail::weighted_partition_common(src, "wstv-quarter");
  if (src.kind != PartitionInstance::Kind::quarter)
    fail(Errc::parse_error, "expected quarter-partition");
  const long long k = partition_target(src);
  Election e;
  e.candidates = {"p", "a", "b"};
  e.tiebreak = {1, 2, 0};  // a > b > p
  for (long long w : src.weights) {
    out.source_votes.push_back(static_cast<int>(e.votes.size()));
    e.votes.push_back({{0, 1, 2}, w, Price()});  // p > a > b
  }
  e.votes.push_back({{1, 0, 2}, 3 * k - 1, Price()});  // a > p > b
  e.votes.push_back({{2, 1, 0}, 2 * k, Price()});      // b > a > p
  check_election(e);
  out.instance = BriberyInstance{std::move(e), RuleSpec::stv(), 0, std::nullopt, Variant::frugal};
  out.expected_winner = 1;  // a
  detail::expect_exact_vulnerable(out, out.source_votes);
  const std::vector<int> source_votes = out.source_votes;
  out.forward_from_selection = [source_votes](const std::vector<int>& subset) {
    Solution sol;
    sol.yes = true;
    for (int i : subset) sol.changes.push_back({source_votes[i], {2, 0, 1}});  // b > p > a
    std::sort(sol.changes.begin(), sol.changes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sol;
  };
  return out;
}

}  // namespace frugal
