#pragma once
// Frugal bribery solvers: an exhaustive reference solver for small
// instances, greedy coalitional-manipulation routines for the rules where
// manipulation is tractable, and the polynomial dollar-bribery algorithms
// for plurality, veto and constant budgets.  Every specialized solver is
// certified against solve_exact in the test suite.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frugal/core.hpp"
#include "frugal/flow.hpp"
#include "frugal/vulnerability.hpp"

namespace frugal {

struct Solution {
  bool yes = false;
  std::vector<std::pair<int, Ranking>> changes;  // vote index -> replacement, index-sorted
  long long cost = 0;
};

inline bool operator==(const Solution& a, const Solution& b) {
  return a.yes == b.yes && a.changes == b.changes && a.cost == b.cost;
}

struct SolveLimits {
  int max_m = 4;
  int max_vulnerable = 6;
};

inline Election apply_changes(const Election& e,
                              const std::vector<std::pair<int, Ranking>>& changes) {
  Election out = e;
  for (const auto& [idx, ranking] : changes) {
    if (idx < 0 || idx >= out.num_votes()) fail(Errc::internal_error, "change index out of range");
    out.votes[idx].ranking = ranking;
  }
  return out;
}

// Independent recheck of a claimed solution; returns human-readable
// violations, empty when the witness is valid.
inline std::vector<std::string> check_solution(const BriberyInstance& inst, const Solution& sol) {
  std::vector<std::string> bad;
  if (!sol.yes) return bad;
  const std::vector<VoteLabel> labels =
      classify_vulnerable(inst.election, inst.rule, inst.target);
  long long cost = 0;
  int prev = -1;
  for (const auto& [idx, ranking] : sol.changes) {
    if (idx <= prev) bad.push_back("witness not sorted by vote index");
    prev = idx;
    if (idx < 0 || idx >= inst.election.num_votes()) {
      bad.push_back("witness touches nonexistent vote " + std::to_string(idx));
      continue;
    }
    if (labels[idx] != VoteLabel::vulnerable)
      bad.push_back("witness changes non-vulnerable vote " + std::to_string(idx));
    if (ranking == inst.election.votes[idx].ranking)
      bad.push_back("witness lists unchanged vote " + std::to_string(idx));
    if (is_dollar(inst.variant)) {
      const Price& p = inst.election.votes[idx].price;
      if (!p.is_finite())
        bad.push_back("witness buys unpriced/infinite vote " + std::to_string(idx));
      else
        cost += p.amount();
    }
  }
  if (!bad.empty()) return bad;
  Election changed = apply_changes(inst.election, sol.changes);
  check_election(changed);
  if (compute_winner(changed, inst.rule) != inst.target)
    bad.push_back("witness does not make the target win");
  if (cost != sol.cost) bad.push_back("reported cost does not match the changed votes");
  if (is_dollar(inst.variant) && inst.budget && cost > *inst.budget)
    bad.push_back("witness exceeds the budget");
  return bad;
}

namespace detail {

inline std::vector<Ranking> all_rankings(int m) {
  Ranking base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Ranking> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Reusable buffers so the exhaustive search does not allocate per leaf.
struct WinnerWorkspace {
  std::vector<long long> scores;
  std::vector<long long> margins;
  std::vector<long long> cnt;
  std::vector<int> pos;
  std::vector<long long> skey;
  std::vector<char> alive;
  std::vector<long long> vec;
  bool vec_ready = false;
};

inline void margins_into(const Election& e, std::vector<long long>& d, std::vector<int>& pos) {
  const int m = e.num_candidates();
  d.assign(static_cast<size_t>(m) * m, 0);
  pos.resize(m);
  for (const Vote& v : e.votes) {
    for (int p = 0; p < m; ++p) pos[v.ranking[p]] = p;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        const long long s = pos[x] < pos[y] ? v.weight : -v.weight;
        d[static_cast<size_t>(x) * m + y] += s;
        d[static_cast<size_t>(y) * m + x] -= s;
      }
  }
}

inline int best_by(const std::vector<long long>& key, const std::vector<int>& tb_rank) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(key.size()); ++c)
    if (key[c] > key[best] || (key[c] == key[best] && tb_rank[c] < tb_rank[best])) best = c;
  return best;
}

inline int winner_noalloc(const Election& e, const RuleSpec& rule,
                          const std::vector<int>& tb_rank, WinnerWorkspace& ws) {
  const int m = e.num_candidates();
  if (is_positional(rule.kind)) {
    if (!ws.vec_ready) {
      ws.vec = score_vector_for(rule, m);
      ws.vec_ready = true;
    }
    ws.scores.assign(m, 0);
    for (const Vote& v : e.votes)
      for (int p = 0; p < m; ++p) ws.scores[v.ranking[p]] += v.weight * ws.vec[p];
    return best_by(ws.scores, tb_rank);
  }
  switch (rule.kind) {
    case RuleKind::maximin: {
      margins_into(e, ws.margins, ws.pos);
      ws.skey.assign(m, 0);
      for (int x = 0; x < m; ++x) {
        long long lo = (m == 1) ? 0 : ws.margins[static_cast<size_t>(x) * m + ((x + 1) % m)];
        for (int y = 0; y < m; ++y)
          if (y != x) lo = std::min(lo, ws.margins[static_cast<size_t>(x) * m + y]);
        ws.skey[x] = lo;
      }
      return best_by(ws.skey, tb_rank);
    }
    case RuleKind::copeland: {
      margins_into(e, ws.margins, ws.pos);
      ws.skey.assign(m, 0);
      for (int x = 0; x < m; ++x) {
        long long wins = 0, ties = 0;
        for (int y = 0; y < m; ++y) {
          if (y == x) continue;
          const long long d = ws.margins[static_cast<size_t>(x) * m + y];
          if (d > 0) ++wins;
          else if (d == 0) ++ties;
        }
        ws.skey[x] = wins * rule.alpha.den + ties * rule.alpha.num;
      }
      return best_by(ws.skey, tb_rank);
    }
    case RuleKind::bucklin: {
      const long long total = e.total_weight();
      ws.cnt.assign(m, 0);
      for (int l = 0; l < m; ++l) {
        for (const Vote& v : e.votes) ws.cnt[v.ranking[l]] += v.weight;
        int best = -1;
        for (int c = 0; c < m; ++c)
          if (2 * ws.cnt[c] > total && (best == -1 || tb_rank[c] < tb_rank[best])) best = c;
        if (best != -1) return best;
      }
      fail(Errc::internal_error, "no bucklin majority at full depth");
    }
    case RuleKind::runoff: {
      ws.scores.assign(m, 0);
      for (const Vote& v : e.votes) ws.scores[v.ranking[0]] += v.weight;
      if (m == 1) return 0;
      auto [x, y] = runoff_leaders(ws.scores, tb_rank);
      long long g = 0;
      ws.pos.resize(m);
      for (const Vote& v : e.votes) {
        for (int p = 0; p < m; ++p) ws.pos[v.ranking[p]] = p;
        g += ws.pos[x] < ws.pos[y] ? v.weight : -v.weight;
      }
      if (g > 0) return x;
      if (g < 0) return y;
      return tb_rank[x] < tb_rank[y] ? x : y;
    }
    case RuleKind::stv: {
      ws.alive.assign(m, 1);
      ws.scores.resize(m);
      for (int round = 0; round + 1 < m; ++round) {
        std::fill(ws.scores.begin(), ws.scores.end(), 0);
        for (const Vote& v : e.votes)
          for (int c : v.ranking)
            if (ws.alive[c]) {
              ws.scores[c] += v.weight;
              break;
            }
        int drop = -1;
        for (int c = 0; c < m; ++c) {
          if (!ws.alive[c]) continue;
          if (drop == -1 || ws.scores[c] < ws.scores[drop] ||
              (ws.scores[c] == ws.scores[drop] && tb_rank[c] > tb_rank[drop]))
            drop = c;
        }
        ws.alive[drop] = 0;
      }
      for (int c = 0; c < m; ++c)
        if (ws.alive[c]) return c;
      fail(Errc::internal_error, "stv left no candidate");
    }
    default:
      fail(Errc::internal_error, "unhandled rule kind");
  }
}

// Odometer over replacement rankings for the votes in `subset`; returns true
// on the first assignment that makes the target win.
inline bool search_assignments(Election& scratch, const std::vector<int>& subset, size_t at,
                               const std::vector<Ranking>& all, const std::vector<int>& orig_id,
                               const RuleSpec& rule, const std::vector<int>& tb_rank, int target,
                               WinnerWorkspace& ws) {
  if (at == subset.size())
    return winner_noalloc(scratch, rule, tb_rank, ws) == target;
  const int vote = subset[at];
  for (int rid = 0; rid < static_cast<int>(all.size()); ++rid) {
    if (rid == orig_id[vote]) continue;
    scratch.votes[vote].ranking = all[rid];
    if (search_assignments(scratch, subset, at + 1, all, orig_id, rule, tb_rank, target, ws))
      return true;
  }
  scratch.votes[vote].ranking = all[orig_id[vote]];
  return false;
}

}  // namespace detail

// Ground-truth solver: exhaustive over all replacement rankings of all
// change-sets of vulnerable votes, smallest change-sets first (dollar
// variants: cheapest change-sets first).  The first witness found under
// that order is returned, so results are deterministic.
inline Solution solve_exact(const BriberyInstance& inst, SolveLimits limits = {}) {
  check_instance(inst);
  const Election& e = inst.election;
  const int m = e.num_candidates();
  const std::vector<int> tb_rank = e.tiebreak_rank();
  if (compute_winner(e, inst.rule) == inst.target) return {true, {}, 0};

  const std::vector<VoteLabel> labels = classify_vulnerable(e, inst.rule, inst.target);
  const std::vector<int> vul = vulnerable_indices(labels);
  if (m > limits.max_m)
    fail(Errc::limit_exceeded, "candidate count exceeds the exact-search cap");
  if (static_cast<int>(vul.size()) > limits.max_vulnerable)
    fail(Errc::limit_exceeded, "vulnerable count exceeds the exact-search cap");

  const std::vector<Ranking> all = detail::all_rankings(m);
  std::vector<int> orig_id(e.num_votes(), -1);
  for (int i : vul) {
    for (int rid = 0; rid < static_cast<int>(all.size()); ++rid)
      if (all[rid] == e.votes[i].ranking) {
        orig_id[i] = rid;
        break;
      }
  }

  Election scratch = e;
  detail::WinnerWorkspace ws;
  auto finish = [&](const std::vector<int>& subset, long long cost) -> Solution {
    Solution sol;
    sol.yes = true;
    sol.cost = cost;
    for (int i : subset) sol.changes.push_back({i, scratch.votes[i].ranking});
    return sol;
  };

  if (!is_dollar(inst.variant)) {
    const int v = static_cast<int>(vul.size());
    for (int k = 0; k <= v; ++k) {
      // lexicographic k-subsets of the vulnerable indices
      std::vector<int> pick(k);
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        for (int j = 0; j < k; ++j) pick[j] = vul[idx[j]];
        if (detail::search_assignments(scratch, pick, 0, all, orig_id, inst.rule, tb_rank,
                                       inst.target, ws))
          return finish(pick, 0);
        int j = k - 1;
        while (j >= 0 && idx[j] == v - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
    return {false, {}, 0};
  }

  // dollar variants: enumerate price-feasible change-sets, cheapest first
  std::vector<int> buyable;
  for (int i : vul)
    if (e.votes[i].price.is_finite()) buyable.push_back(i);
  const long long budget = *inst.budget;
  struct ChangeSet {
    long long cost;
    std::vector<int> votes;
  };
  std::vector<ChangeSet> sets;
  const int b = static_cast<int>(buyable.size());
  if (b > 30) fail(Errc::limit_exceeded, "too many purchasable votes for exact search");
  for (unsigned mask = 0; mask < (1u << b); ++mask) {
    long long cost = 0;
    std::vector<int> votes;
    for (int j = 0; j < b; ++j)
      if (mask & (1u << j)) {
        cost += e.votes[buyable[j]].price.amount();
        votes.push_back(buyable[j]);
      }
    if (cost <= budget) sets.push_back({cost, std::move(votes)});
  }
  std::stable_sort(sets.begin(), sets.end(), [](const ChangeSet& a, const ChangeSet& c) {
    if (a.cost != c.cost) return a.cost < c.cost;
    if (a.votes.size() != c.votes.size()) return a.votes.size() < c.votes.size();
    return a.votes < c.votes;
  });
  for (const ChangeSet& s : sets) {
    if (detail::search_assignments(scratch, s.votes, 0, all, orig_id, inst.rule, tb_rank,
                                   inst.target, ws))
      return finish(s.votes, s.cost);
  }
  return {false, {}, 0};
}

// ---------------------------------------------------------------------------
// Coalitional manipulation

namespace detail {

inline Ranking ranking_with_first(int m, int first) {
  Ranking r;
  r.reserve(m);
  r.push_back(first);
  for (int c = 0; c < m; ++c)
    if (c != first) r.push_back(c);
  return r;
}

// Fill f votes with `per_vote` distinct rivals each, honoring per-rival
// usage quotas; picks the largest remaining quota first.  Returns one rival
// set per vote, or nullopt when the quotas cannot be met.
inline std::optional<std::vector<std::vector<int>>> fill_slots(
    int f, int per_vote, std::vector<long long> quota, const std::vector<int>& rivals) {
  std::vector<std::vector<int>> out(f);
  for (int v = 0; v < f; ++v) {
    std::vector<int> order = rivals;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return quota[a] > quota[b]; });
    for (int j = 0; j < per_vote; ++j) {
      if (j >= static_cast<int>(order.size()) || quota[order[j]] <= 0) return std::nullopt;
      out[v].push_back(order[j]);
      --quota[order[j]];
    }
  }
  return out;
}

// k-approval manipulation: target first everywhere; spread the remaining
// k-1 approvals of each free vote below the per-rival absorption caps.
inline std::optional<std::vector<Ranking>> cm_approval(const Election& fixed, int k, int f,
                                                       int target,
                                                       const std::vector<int>& tb_rank) {
  const int m = fixed.num_candidates();
  std::vector<long long> s(m, 0);
  if (!fixed.votes.empty())
    s = positional_scores(fixed, score_vector_for(RuleSpec::k_approval(k), m));
  const long long target_final = s[target] + f;
  std::vector<long long> cap(m, 0);
  std::vector<int> rivals;
  for (int x = 0; x < m; ++x) {
    if (x == target) continue;
    cap[x] = target_final - s[x] - (tb_rank[target] < tb_rank[x] ? 0 : 1);
    if (cap[x] < 0) return std::nullopt;
    cap[x] = std::min(cap[x], static_cast<long long>(f));
    rivals.push_back(x);
  }
  auto slots = fill_slots(f, k - 1, cap, rivals);
  if (!slots) return std::nullopt;
  std::vector<Ranking> out;
  for (int v = 0; v < f; ++v) {
    std::vector<char> approved(m, 0);
    approved[target] = 1;
    for (int x : (*slots)[v]) approved[x] = 1;
    Ranking r;
    r.push_back(target);
    std::vector<int> chosen = (*slots)[v];
    std::sort(chosen.begin(), chosen.end());
    for (int x : chosen) r.push_back(x);
    for (int c = 0; c < m; ++c)
      if (!approved[c]) r.push_back(c);
    out.push_back(std::move(r));
  }
  return out;
}

// k-veto manipulation: target first everywhere; each free vote sinks k
// distinct rivals, serving the per-rival veto deficits first.
inline std::optional<std::vector<Ranking>> cm_veto(const Election& fixed, int k, int f,
                                                   int target, const std::vector<int>& tb_rank) {
  const int m = fixed.num_candidates();
  std::vector<long long> s(m, 0);
  if (!fixed.votes.empty())
    s = positional_scores(fixed, score_vector_for(RuleSpec::k_veto(k), m));
  std::vector<long long> deficit(m, 0);
  long long total_deficit = 0;
  for (int x = 0; x < m; ++x) {
    if (x == target) continue;
    deficit[x] = std::max(0LL, s[x] - s[target] + (tb_rank[target] < tb_rank[x] ? 0 : 1));
    if (deficit[x] > f) return std::nullopt;
    total_deficit += deficit[x];
  }
  if (total_deficit > static_cast<long long>(f) * k) return std::nullopt;
  std::vector<std::vector<int>> sunk(f);
  for (int v = 0; v < f; ++v) {
    std::vector<int> order;
    for (int x = 0; x < m; ++x)
      if (x != target) order.push_back(x);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deficit[a] > deficit[b]; });
    // rivals with no remaining deficit pad the tail in declaration order
    for (int j = 0; j < k; ++j) {
      sunk[v].push_back(order[j]);
      if (deficit[order[j]] > 0) --deficit[order[j]];
    }
  }
  for (int x = 0; x < m; ++x)
    if (deficit[x] > 0) return std::nullopt;
  std::vector<Ranking> out;
  for (int v = 0; v < f; ++v) {
    std::vector<char> is_sunk(m, 0);
    for (int x : sunk[v]) is_sunk[x] = 1;
    Ranking r;
    r.push_back(target);
    for (int c = 0; c < m; ++c)
      if (c != target && !is_sunk[c]) r.push_back(c);
    std::vector<int> tail = sunk[v];
    std::sort(tail.begin(), tail.end());
    for (int x : tail) r.push_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

// Bucklin manipulation.  With the target on top of every free vote its
// winning depth b is fixed; rivals may then appear in the top-b region of
// the free votes only up to per-rival allowances.  Aggregate feasibility is
// a small flow problem; the schedule is rebuilt round-robin afterwards.
inline std::optional<std::vector<Ranking>> cm_bucklin(const Election& fixed, int f, int target,
                                                      const std::vector<int>& tb_rank) {
  const int m = fixed.num_candidates();
  long long fixed_weight = 0;
  for (const Vote& v : fixed.votes) fixed_weight += v.weight;
  const long long total = fixed_weight + f;
  const long long need = total / 2 + 1;  // strict majority

  // cnt[x][l] = fixed-vote weight ranking x within top l+1
  std::vector<std::vector<long long>> cnt(m, std::vector<long long>(m + 1, 0));
  for (const Vote& v : fixed.votes)
    for (int l = 0; l < m; ++l) cnt[v.ranking[l]][l + 1] += v.weight;
  for (int x = 0; x < m; ++x)
    for (int l = 1; l <= m; ++l) cnt[x][l] += cnt[x][l - 1];

  int b = m;
  for (int l = 1; l <= m; ++l)
    if (cnt[target][l] + f >= need) {
      b = l;
      break;
    }

  std::vector<int> rivals;
  for (int x = 0; x < m; ++x)
    if (x != target) rivals.push_back(x);

  auto emit = [&](const std::vector<std::vector<int>>& top_block,
                  const std::vector<int>& last_slot) {
    std::vector<Ranking> out;
    for (int v = 0; v < f; ++v) {
      std::vector<char> used(m, 0);
      Ranking r;
      r.push_back(target);
      used[target] = 1;
      std::vector<int> inner = top_block.empty() ? std::vector<int>{} : top_block[v];
      std::sort(inner.begin(), inner.end());
      for (int x : inner) {
        r.push_back(x);
        used[x] = 1;
      }
      if (!last_slot.empty()) {
        r.push_back(last_slot[v]);
        used[last_slot[v]] = 1;
      }
      for (int c = 0; c < m; ++c)
        if (!used[c]) r.push_back(c);
      out.push_back(std::move(r));
    }
    return out;
  };

  if (b == 1) {
    for (int x : rivals)
      if (tb_rank[x] < tb_rank[target] && cnt[x][1] >= need) return std::nullopt;
    return emit({}, {});
  }

  // allowances: stronger rivals (preferred by the tie-break) may appear in
  // the top b of the free votes at most u_x times; weaker rivals may appear
  // in the top b-1 at most w_x times and freely at position b
  std::vector<long long> allow(m, 0);
  std::vector<char> stronger(m, 0);
  for (int x : rivals) {
    stronger[x] = tb_rank[x] < tb_rank[target];
    allow[x] = need - 1 - (stronger[x] ? cnt[x][b] : cnt[x][b - 1]);
    if (allow[x] < 0) return std::nullopt;
  }

  // nodes: 0 source, 1 sink, 2 inner-src, 3 last-src, then per rival in/last/tot
  const int r = static_cast<int>(rivals.size());
  detail::MinCostFlow net(4 + 3 * r);
  const long long inner_slots = static_cast<long long>(f) * (b - 2);
  net.add_edge(0, 2, inner_slots, 0);
  net.add_edge(0, 3, f, 0);
  std::vector<int> in_edge(r), last_edge(r);
  for (int i = 0; i < r; ++i) {
    const int x = rivals[i];
    const int nin = 4 + 3 * i, nlast = 5 + 3 * i, ntot = 6 + 3 * i;
    in_edge[i] = net.add_edge(2, nin, stronger[x] ? static_cast<long long>(f)
                                                  : std::min<long long>(allow[x], f),
                              0);
    last_edge[i] = net.add_edge(3, nlast, f, 0);
    net.add_edge(nin, ntot, f, 0);
    net.add_edge(nlast, ntot, f, 0);
    net.add_edge(ntot, 1, stronger[x] ? std::min<long long>(allow[x], f) : f, 0);
  }
  const long long wanted = inner_slots + f;
  auto [flow, cost] = net.run(0, 1, wanted);
  (void)cost;
  if (flow != wanted) return std::nullopt;

  std::vector<long long> t_cnt(m, 0), l_cnt(m, 0);
  for (int i = 0; i < r; ++i) {
    t_cnt[rivals[i]] = net.flow_on(in_edge[i]);
    l_cnt[rivals[i]] = net.flow_on(last_edge[i]);
  }

  // position-b occupants: rival tokens laid out consecutively over the votes
  std::vector<int> last_slot;
  for (int x : rivals)
    for (long long j = 0; j < l_cnt[x]; ++j) last_slot.push_back(x);

  // inner region via a small matching; rival x may not reappear in a vote
  // whose position b it already holds
  std::vector<std::vector<int>> top_block(f);
  if (b >= 3) {
    detail::MinCostFlow match(2 + f + r);
    std::vector<std::vector<int>> edge_id(f, std::vector<int>(r, -1));
    for (int v = 0; v < f; ++v) match.add_edge(0, 2 + v, b - 2, 0);
    for (int v = 0; v < f; ++v)
      for (int i = 0; i < r; ++i)
        if (last_slot[v] != rivals[i]) edge_id[v][i] = match.add_edge(2 + v, 2 + f + i, 1, 0);
    for (int i = 0; i < r; ++i) match.add_edge(2 + f + i, 1, t_cnt[rivals[i]], 0);
    auto [mf, mc] = match.run(0, 1, inner_slots);
    (void)mc;
    if (mf != inner_slots) fail(Errc::internal_error, "bucklin schedule infeasible");
    for (int v = 0; v < f; ++v)
      for (int i = 0; i < r; ++i)
        if (edge_id[v][i] != -1 && match.flow_on(edge_id[v][i]) > 0)
          top_block[v].push_back(rivals[i]);
  }
  return emit(top_block, last_slot);
}

// Plurality-with-runoff manipulation: the target tops some free votes and a
// chosen co-finalist tops the rest (with the target in second place).
inline std::optional<std::vector<Ranking>> cm_runoff(const Election& fixed, int f, int target,
                                                     const std::vector<int>& tb_rank) {
  const int m = fixed.num_candidates();
  Election combined = fixed;
  combined.votes.reserve(fixed.votes.size() + f);
  WinnerWorkspace ws;
  const Ranking target_top = ranking_with_first(m, target);
  for (int x = 0; x < m; ++x) {
    if (x == target && m > 1) continue;
    Ranking rival_top;
    rival_top.push_back(x);
    if (x != target) rival_top.push_back(target);
    for (int c = 0; c < m; ++c)
      if (c != x && c != target) rival_top.push_back(c);
    for (int k = f; k >= 0; --k) {
      combined.votes.resize(fixed.votes.size());
      for (int j = 0; j < k; ++j) combined.votes.push_back({target_top, 1, Price()});
      for (int j = k; j < f; ++j) combined.votes.push_back({rival_top, 1, Price()});
      if (winner_noalloc(combined, RuleSpec::runoff(), tb_rank, ws) == target) {
        std::vector<Ranking> out;
        for (int j = 0; j < k; ++j) out.push_back(target_top);
        for (int j = k; j < f; ++j) out.push_back(rival_top);
        return out;
      }
      if (m == 1) break;
    }
  }
  return std::nullopt;
}

// Weighted three-candidate manipulation for maximin / Copeland: the target
// tops every free vote, leaving one binary choice per vote; a subset-sum
// table over the free weights enumerates the achievable pairwise margins.
inline std::optional<std::vector<Ranking>> cm_threecand(const Election& fixed,
                                                        const RuleSpec& rule,
                                                        const std::vector<long long>& weights,
                                                        int target,
                                                        const std::vector<int>& tb_rank) {
  const int m = fixed.num_candidates();
  if (m != 3) fail(Errc::unsupported_rule, "three-candidate solver requires m = 3");
  std::vector<int> rivals;
  for (int c = 0; c < 3; ++c)
    if (c != target) rivals.push_back(c);
  const int a = rivals[0], b = rivals[1];

  MarginMatrix base;
  base.m = 3;
  base.d.assign(9, 0);
  if (!fixed.votes.empty()) base = majority_graph(fixed);

  const int n = static_cast<int>(weights.size());
  long long total = 0;
  for (long long w : weights) total += w;

  // reachable[i][s]: some subset of the first i weights sums to s
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (int i = 0; i < n; ++i)
    for (long long s = 0; s <= total; ++s)
      if (reach[i][s]) {
        reach[i + 1][s] = 1;
        if (s + weights[i] <= total) reach[i + 1][s + weights[i]] = 1;
      }

  WinnerWorkspace ws;
  for (long long s = 0; s <= total; ++s) {
    if (!reach[n][s]) continue;
    MarginMatrix d = base;
    d.at(target, a) += total;
    d.at(a, target) -= total;
    d.at(target, b) += total;
    d.at(b, target) -= total;
    d.at(a, b) += 2 * s - total;
    d.at(b, a) -= 2 * s - total;

    std::vector<long long> key(3, 0);
    if (rule.kind == RuleKind::maximin) {
      key = maximin_scores(d);
    } else if (rule.kind == RuleKind::copeland) {
      key = copeland_keys(d, rule.alpha);
    } else {
      fail(Errc::unsupported_rule, "three-candidate solver supports maximin and copeland");
    }
    if (best_by(key, tb_rank) != target) continue;

    // reconstruct the side-a subset; prefer leaving a weight out
    std::vector<char> side_a(n, 0);
    long long rem = s;
    for (int i = n; i > 0; --i) {
      if (reach[i - 1][rem]) continue;
      side_a[i - 1] = 1;
      rem -= weights[i - 1];
    }
    std::vector<Ranking> out;
    for (int i = 0; i < n; ++i)
      out.push_back(side_a[i] ? Ranking{target, a, b} : Ranking{target, b, a});
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

// Free-vote manipulation: chooses rankings for `free_weights.size()` extra
// votes so the target wins the combined election, or nullopt when no choice
// works.  Unweighted rules: plurality, veto, k-approval, k-veto, Bucklin,
// runoff; weighted with three candidates: maximin, Copeland.
inline std::optional<std::vector<Ranking>> cm_greedy(const Election& fixed, const RuleSpec& rule,
                                                     const std::vector<long long>& free_weights,
                                                     int target) {
  const int m = fixed.num_candidates();
  check_rule(rule, m);
  if (target < 0 || target >= m) fail(Errc::unknown_target, "target candidate out of range");
  const std::vector<int> tb_rank = fixed.tiebreak_rank();
  const int f = static_cast<int>(free_weights.size());

  std::optional<std::vector<Ranking>> result;
  switch (rule.kind) {
    case RuleKind::maximin:
    case RuleKind::copeland:
      result = detail::cm_threecand(fixed, rule, free_weights, target, tb_rank);
      break;
    case RuleKind::plurality:
    case RuleKind::veto:
    case RuleKind::k_approval:
    case RuleKind::k_veto:
    case RuleKind::bucklin:
    case RuleKind::runoff: {
      for (long long w : free_weights)
        if (w != 1) fail(Errc::unsupported_rule, "rule supports unweighted manipulation only");
      for (const Vote& v : fixed.votes)
        if (v.weight != 1) fail(Errc::unsupported_rule, "rule supports unweighted manipulation only");
      const int k = rule.kind == RuleKind::plurality ? 1
                    : rule.kind == RuleKind::veto    ? 1
                                                     : rule.k;
      if (rule.kind == RuleKind::plurality || rule.kind == RuleKind::k_approval)
        result = detail::cm_approval(fixed, k, f, target, tb_rank);
      else if (rule.kind == RuleKind::veto || rule.kind == RuleKind::k_veto)
        result = detail::cm_veto(fixed, k, f, target, tb_rank);
      else if (rule.kind == RuleKind::bucklin)
        result = detail::cm_bucklin(fixed, f, target, tb_rank);
      else
        result = detail::cm_runoff(fixed, f, target, tb_rank);
      break;
    }
    default:
      fail(Errc::unsupported_rule,
           std::string("no manipulation algorithm for ") + rule_kind_name(rule.kind));
  }
  if (!result) return std::nullopt;

  Election combined = fixed;
  for (int i = 0; i < f; ++i) combined.votes.push_back({(*result)[i], free_weights[i], Price()});
  if (combined.votes.empty()) fail(Errc::invalid_election, "nothing to decide");
  if (compute_winner(combined, rule) != target)
    fail(Errc::internal_error, "manipulation witness failed its own recheck");
  return result;
}

namespace detail {

inline Election drop_votes(const Election& e, const std::vector<int>& drop) {
  Election out;
  out.candidates = e.candidates;
  out.tiebreak = e.tiebreak;
  std::vector<char> gone(e.num_votes(), 0);
  for (int i : drop) gone[i] = 1;
  for (int i = 0; i < e.num_votes(); ++i)
    if (!gone[i]) out.votes.push_back(e.votes[i]);
  return out;
}

inline Solution changes_from(const BriberyInstance& inst, const std::vector<int>& freed,
                             const std::vector<Ranking>& rankings) {
  Solution sol;
  sol.yes = true;
  for (size_t j = 0; j < freed.size(); ++j) {
    const int idx = freed[j];
    if (rankings[j] != inst.election.votes[idx].ranking) {
      sol.changes.push_back({idx, rankings[j]});
      if (is_dollar(inst.variant) && inst.election.votes[idx].price.is_finite())
        sol.cost += inst.election.votes[idx].price.amount();
    }
  }
  std::sort(sol.changes.begin(), sol.changes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return sol;
}

}  // namespace detail

// Frugal bribery through manipulation: every vulnerable vote becomes a free
// manipulator ballot.  Polynomial for the unweighted rules cm_greedy covers.
inline Solution solve_frugal_poly(const BriberyInstance& inst) {
  check_instance(inst);
  if (inst.variant != Variant::frugal)
    fail(Errc::unsupported_rule, "solver handles the frugal variant only");
  switch (inst.rule.kind) {
    case RuleKind::plurality:
    case RuleKind::veto:
    case RuleKind::k_approval:
    case RuleKind::k_veto:
    case RuleKind::bucklin:
    case RuleKind::runoff:
      break;
    default:
      fail(Errc::unsupported_rule,
           std::string("no polynomial frugal solver for ") + rule_kind_name(inst.rule.kind));
  }
  if (compute_winner(inst.election, inst.rule) == inst.target) return {true, {}, 0};
  const std::vector<int> vul =
      vulnerable_indices(classify_vulnerable(inst.election, inst.rule, inst.target));
  const Election fixed = detail::drop_votes(inst.election, vul);
  auto res = cm_greedy(fixed, inst.rule, std::vector<long long>(vul.size(), 1), inst.target);
  if (!res) return {false, {}, 0};
  return detail::changes_from(inst, vul, *res);
}

// Dollar bribery under plurality: buy vote flips onto the target, cheapest
// first, sweeping over the target's final score.
inline Solution solve_dollar_plurality(const BriberyInstance& inst) {
  check_instance(inst);
  if (inst.rule.kind != RuleKind::plurality || !is_dollar(inst.variant))
    fail(Errc::unsupported_rule, "solver handles dollar plurality only");
  for (const Vote& v : inst.election.votes)
    if (v.weight != 1) fail(Errc::unsupported_rule, "solver handles unweighted elections only");
  const Election& e = inst.election;
  const int m = e.num_candidates();
  const int target = inst.target;
  const std::vector<int> tb_rank = e.tiebreak_rank();
  if (compute_winner(e, inst.rule) == target) return {true, {}, 0};

  const std::vector<VoteLabel> labels = classify_vulnerable(e, inst.rule, target);
  std::vector<long long> s = positional_scores(e, detail::score_vector_for(inst.rule, m));

  // purchasable vulnerable votes grouped by their current top candidate
  std::vector<std::vector<std::pair<long long, int>>> pool(m);
  long long purchasable = 0;
  for (int i = 0; i < e.num_votes(); ++i) {
    if (labels[i] != VoteLabel::vulnerable || !e.votes[i].price.is_finite()) continue;
    const int top = e.votes[i].ranking[0];
    if (top == target) continue;
    pool[top].push_back({e.votes[i].price.amount(), i});
    ++purchasable;
  }
  for (auto& p : pool) std::sort(p.begin(), p.end());

  const long long budget = *inst.budget;
  std::optional<std::pair<long long, long long>> best;  // cost, #changes
  std::vector<int> best_votes;
  for (long long t = s[target]; t <= s[target] + purchasable; ++t) {
    const long long buys = t - s[target];
    long long required = 0;
    bool ok = true;
    std::vector<long long> r(m, 0);
    for (int x = 0; x < m && ok; ++x) {
      if (x == target) continue;
      r[x] = std::max(0LL, s[x] - t + (tb_rank[x] < tb_rank[target] ? 1 : 0));
      if (r[x] > static_cast<long long>(pool[x].size())) ok = false;
      required += r[x];
    }
    if (!ok || required > buys) continue;
    long long cost = 0;
    std::vector<int> chosen;
    std::vector<std::pair<long long, int>> rest;
    for (int x = 0; x < m; ++x) {
      if (x == target) continue;
      for (size_t j = 0; j < pool[x].size(); ++j) {
        if (static_cast<long long>(j) < r[x]) {
          cost += pool[x][j].first;
          chosen.push_back(pool[x][j].second);
        } else {
          rest.push_back(pool[x][j]);
        }
      }
    }
    std::sort(rest.begin(), rest.end());
    for (long long j = 0; j < buys - required; ++j) {
      cost += rest[j].first;
      chosen.push_back(rest[j].second);
    }
    if (cost > budget) continue;
    if (!best || cost < best->first || (cost == best->first && buys < best->second)) {
      best = {cost, buys};
      best_votes = std::move(chosen);
    }
  }
  if (!best) return {false, {}, 0};
  Solution sol;
  sol.yes = true;
  sol.cost = best->first;
  std::sort(best_votes.begin(), best_votes.end());
  for (int i : best_votes) {
    Ranking r;
    r.push_back(target);
    for (int c : e.votes[i].ranking)
      if (c != target) r.push_back(c);
    sol.changes.push_back({i, std::move(r)});
  }
  return sol;
}

// Dollar bribery under veto: the target's veto count is fixed, so the task
// is a min-cost reassignment of purchased vetoes onto rivals that still
// need them.  Moving a veto off a rival below its own requirement is never
// useful, which caps each group's outflow at its surplus.
inline Solution solve_dollar_veto(const BriberyInstance& inst) {
  check_instance(inst);
  if (inst.rule.kind != RuleKind::veto || !is_dollar(inst.variant))
    fail(Errc::unsupported_rule, "solver handles dollar veto only");
  for (const Vote& v : inst.election.votes)
    if (v.weight != 1) fail(Errc::unsupported_rule, "solver handles unweighted elections only");
  const Election& e = inst.election;
  const int m = e.num_candidates();
  const int target = inst.target;
  const std::vector<int> tb_rank = e.tiebreak_rank();
  if (compute_winner(e, inst.rule) == target) return {true, {}, 0};

  const std::vector<VoteLabel> labels = classify_vulnerable(e, inst.rule, target);
  std::vector<long long> vetoes(m, 0);
  for (const Vote& v : e.votes) vetoes[v.ranking[m - 1]] += 1;

  std::vector<long long> demand(m, 0), surplus(m, 0);
  long long total_demand = 0;
  for (int x = 0; x < m; ++x) {
    if (x == target) continue;
    const long long need = vetoes[target] + (tb_rank[x] < tb_rank[target] ? 1 : 0);
    demand[x] = std::max(0LL, need - vetoes[x]);
    surplus[x] = std::max(0LL, vetoes[x] - need);
    total_demand += demand[x];
  }

  // purchasable vulnerable votes grouped by current veto victim
  std::vector<std::vector<std::pair<long long, int>>> group(m);
  for (int i = 0; i < e.num_votes(); ++i) {
    if (labels[i] != VoteLabel::vulnerable || !e.votes[i].price.is_finite()) continue;
    group[e.votes[i].ranking[m - 1]].push_back({e.votes[i].price.amount(), i});
  }
  for (auto& g : group) std::sort(g.begin(), g.end());

  // nodes: 0 source, 1 sink, 2+x group, 2+m+x group-out, 2+2m+y recipient
  detail::MinCostFlow net(2 + 3 * m);
  std::vector<std::vector<int>> vote_edge(m);
  std::vector<std::vector<std::pair<int, int>>> xfer(m);  // (recipient, edge id)
  for (int x = 0; x < m; ++x) {
    if (x == target) continue;
    for (const auto& [price, idx] : group[x]) {
      (void)idx;
      vote_edge[x].push_back(net.add_edge(0, 2 + x, 1, price));
    }
    net.add_edge(2 + x, 2 + m + x, surplus[x], 0);
    for (int y = 0; y < m; ++y) {
      if (y == target || y == x) continue;
      xfer[x].push_back({y, net.add_edge(2 + m + x, 2 + 2 * m + y, total_demand, 0)});
    }
  }
  for (int y = 0; y < m; ++y) {
    if (y == target) continue;
    net.add_edge(2 + 2 * m + y, 1, demand[y], 0);
  }
  auto [flow, cost] = net.run(0, 1, total_demand);
  if (flow != total_demand) return {false, {}, 0};
  if (cost > *inst.budget) return {false, {}, 0};

  Solution sol;
  sol.yes = true;
  sol.cost = cost;
  for (int x = 0; x < m; ++x) {
    if (x == target) continue;
    std::vector<int> bought;  // price order, matching cheapest-path augmentation
    for (size_t j = 0; j < vote_edge[x].size(); ++j)
      if (net.flow_on(vote_edge[x][j]) > 0) bought.push_back(group[x][j].second);
    size_t at = 0;
    for (const auto& [y, eid] : xfer[x])
      for (long long u = 0; u < net.flow_on(eid); ++u) {
        const int idx = bought[at++];
        Ranking r;
        for (int c : e.votes[idx].ranking)
          if (c != y) r.push_back(c);
        r.push_back(y);
        sol.changes.push_back({idx, std::move(r)});
      }
  }
  std::sort(sol.changes.begin(), sol.changes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return sol;
}

// Dollar bribery with a constant budget for plurality / k-approval /
// Bucklin / runoff: every zero-priced vulnerable vote is freed, every
// affordable positive-priced subset is tried through cm_greedy.
inline Solution solve_dollar_budgeted(const BriberyInstance& inst, int budget_cap = 3) {
  check_instance(inst);
  if (!is_dollar(inst.variant)) fail(Errc::unsupported_rule, "solver handles dollar variants only");
  switch (inst.rule.kind) {
    case RuleKind::plurality:
    case RuleKind::k_approval:
    case RuleKind::bucklin:
    case RuleKind::runoff:
      break;
    default:
      fail(Errc::unsupported_rule,
           std::string("no constant-budget solver for ") + rule_kind_name(inst.rule.kind));
  }
  const long long budget = *inst.budget;
  if (budget > budget_cap) fail(Errc::budget_too_large, "budget exceeds the constant-budget cap");
  if (compute_winner(inst.election, inst.rule) == inst.target) return {true, {}, 0};

  const std::vector<VoteLabel> labels =
      classify_vulnerable(inst.election, inst.rule, inst.target);
  std::vector<int> zero, priced;
  for (int i = 0; i < inst.election.num_votes(); ++i) {
    if (labels[i] != VoteLabel::vulnerable || !inst.election.votes[i].price.is_finite()) continue;
    (inst.election.votes[i].price.amount() == 0 ? zero : priced).push_back(i);
  }

  // affordable positive-priced subsets, cheapest first, then smaller, then lex
  struct Pick {
    long long cost;
    std::vector<int> votes;
  };
  std::vector<Pick> picks;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t from, long long cost) -> void {
    picks.push_back({cost, cur});
    for (size_t j = from; j < priced.size(); ++j) {
      const long long p = inst.election.votes[priced[j]].price.amount();
      if (cost + p > budget) continue;
      cur.push_back(priced[j]);
      self(self, j + 1, cost + p);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::stable_sort(picks.begin(), picks.end(), [](const Pick& a, const Pick& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.votes.size() != b.votes.size()) return a.votes.size() < b.votes.size();
    return a.votes < b.votes;
  });

  for (const Pick& pick : picks) {
    std::vector<int> freed = zero;
    freed.insert(freed.end(), pick.votes.begin(), pick.votes.end());
    std::sort(freed.begin(), freed.end());
    const Election fixed = detail::drop_votes(inst.election, freed);
    auto res =
        cm_greedy(fixed, inst.rule, std::vector<long long>(freed.size(), 1), inst.target);
    if (res) return detail::changes_from(inst, freed, *res);
  }
  return {false, {}, 0};
}

// Weighted frugal plurality: retopping every vulnerable vote onto the
// target is optimal, so one evaluation decides.
inline Solution solve_weighted_plurality_frugal(const BriberyInstance& inst) {
  check_instance(inst);
  if (inst.rule.kind != RuleKind::plurality || inst.variant != Variant::frugal)
    fail(Errc::unsupported_rule, "solver handles frugal plurality only");
  if (compute_winner(inst.election, inst.rule) == inst.target) return {true, {}, 0};
  const std::vector<VoteLabel> labels =
      classify_vulnerable(inst.election, inst.rule, inst.target);
  Solution sol;
  Election changed = inst.election;
  for (int i = 0; i < changed.num_votes(); ++i) {
    if (labels[i] != VoteLabel::vulnerable) continue;
    if (changed.votes[i].ranking[0] == inst.target) continue;
    Ranking r;
    r.push_back(inst.target);
    for (int c : changed.votes[i].ranking)
      if (c != inst.target) r.push_back(c);
    changed.votes[i].ranking = r;
    sol.changes.push_back({i, std::move(r)});
  }
  if (compute_winner(changed, inst.rule) != inst.target) return {false, {}, 0};
  sol.yes = true;
  return sol;
}

// Weighted frugal maximin / Copeland with three candidates, via the
// subset-sum route in cm_threecand.
inline Solution solve_weighted_threecand(const BriberyInstance& inst) {
  check_instance(inst);
  if (inst.election.num_candidates() != 3)
    fail(Errc::unsupported_rule, "solver requires exactly three candidates");
  if (inst.variant != Variant::frugal)
    fail(Errc::unsupported_rule, "solver handles the frugal variant only");
  if (inst.rule.kind != RuleKind::maximin && inst.rule.kind != RuleKind::copeland)
    fail(Errc::unsupported_rule, "solver handles maximin and copeland only");
  if (compute_winner(inst.election, inst.rule) == inst.target) return {true, {}, 0};
  const std::vector<int> vul =
      vulnerable_indices(classify_vulnerable(inst.election, inst.rule, inst.target));
  std::vector<long long> weights;
  for (int i : vul) weights.push_back(inst.election.votes[i].weight);
  const Election fixed = detail::drop_votes(inst.election, vul);
  auto res = cm_greedy(fixed, inst.rule, weights, inst.target);
  if (!res) return {false, {}, 0};
  return detail::changes_from(inst, vul, *res);
}

}  // namespace frugal
