#pragma once
// Shared test utilities: compact election builders, a deterministic RNG and
// independent per-rule co-winner computations used to cross-check the
// library (kept free of library scoring calls on purpose).

#include <random>
#include <string>
#include <vector>

#include "frugal/frugal.hpp"

namespace testutil {

using namespace frugal;

inline Election make_election(const std::vector<std::string>& candidates,
                              const std::vector<std::pair<Ranking, long long>>& votes,
                              Ranking tiebreak = {}) {
  Election e;
  e.candidates = candidates;
  if (tiebreak.empty()) {
    for (int c = 0; c < static_cast<int>(candidates.size()); ++c) e.tiebreak.push_back(c);
  } else {
    e.tiebreak = std::move(tiebreak);
  }
  for (const auto& [r, w] : votes) e.votes.push_back({r, w, Price()});
  check_election(e);
  return e;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(uint32_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<uint32_t>(n)); }
};

inline Ranking random_ranking(Rng& rng, int m) {
  Ranking r(m);
  std::iota(r.begin(), r.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(r[i], r[rng.below(i + 1)]);
  return r;
}

inline Election random_election(Rng& rng, int m, int n, int max_weight = 1) {
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) names.push_back(std::string(1, static_cast<char>('a' + c)));
  std::vector<std::pair<Ranking, long long>> votes;
  for (int i = 0; i < n; ++i)
    votes.push_back({random_ranking(rng, m), 1 + rng.below(max_weight)});
  return make_election(names, votes, random_ranking(rng, m));
}

// Independent co-winner sets, written as direct transcriptions of the rule
// definitions (position scans rather than score-vector machinery).
inline std::vector<int> brute_positional_cowinners(const Election& e,
                                                   const std::vector<long long>& alpha) {
  const int m = e.num_candidates();
  std::vector<long long> s(m, 0);
  for (const Vote& v : e.votes)
    for (int pos = 0; pos < m; ++pos) s[v.ranking[pos]] += v.weight * alpha[pos];
  long long best = s[0];
  for (long long x : s) best = std::max(best, x);
  std::vector<int> out;
  for (int c = 0; c < m; ++c)
    if (s[c] == best) out.push_back(c);
  return out;
}

inline long long brute_pairwise(const Election& e, int x, int y) {
  long long d = 0;
  for (const Vote& v : e.votes)
    for (int c : v.ranking) {
      if (c == x) {
        d += v.weight;
        break;
      }
      if (c == y) {
        d -= v.weight;
        break;
      }
    }
  return d;
}

inline std::vector<int> brute_maximin_cowinners(const Election& e) {
  const int m = e.num_candidates();
  std::vector<long long> s(m);
  for (int x = 0; x < m; ++x) {
    long long lo = 0;
    bool first = true;
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      const long long d = brute_pairwise(e, x, y);
      if (first || d < lo) lo = d;
      first = false;
    }
    s[x] = lo;
  }
  long long best = s[0];
  for (long long v : s) best = std::max(best, v);
  std::vector<int> out;
  for (int c = 0; c < m; ++c)
    if (s[c] == best) out.push_back(c);
  return out;
}

// Copeland with rational alpha compared through cross-multiplied integers.
inline std::vector<int> brute_copeland_cowinners(const Election& e, long long num, long long den) {
  const int m = e.num_candidates();
  std::vector<long long> key(m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      const long long d = brute_pairwise(e, x, y);
      if (d > 0) key[x] += den;
      if (d == 0) key[x] += num;
    }
  }
  long long best = key[0];
  for (long long v : key) best = std::max(best, v);
  std::vector<int> out;
  for (int c = 0; c < m; ++c)
    if (key[c] == best) out.push_back(c);
  return out;
}

inline std::vector<int> brute_bucklin_cowinners(const Election& e) {
  const int m = e.num_candidates();
  const long long total = e.total_weight();
  std::vector<int> depth(m, m + 1);
  for (int c = 0; c < m; ++c)
    for (int l = 1; l <= m; ++l) {
      long long cnt = 0;
      for (const Vote& v : e.votes)
        for (int pos = 0; pos < l; ++pos)
          if (v.ranking[pos] == c) cnt += v.weight;
      if (2 * cnt > total) {
        depth[c] = l;
        break;
      }
    }
  int best = depth[0];
  for (int d : depth) best = std::min(best, d);
  std::vector<int> out;
  for (int c = 0; c < m; ++c)
    if (depth[c] == best) out.push_back(c);
  return out;
}

inline Election duplicate_by_weight(const Election& e) {
  Election out;
  out.candidates = e.candidates;
  out.tiebreak = e.tiebreak;
  for (const Vote& v : e.votes)
    for (long long i = 0; i < v.weight; ++i) out.votes.push_back({v.ranking, 1, v.price});
  return out;
}

}  // namespace testutil
