#pragma once
// Elections over ranked ballots: positional scores, pairwise margins and
// tie-broken winner determination for plurality, veto, k-approval, k-veto,
// Borda, arbitrary scoring vectors, maximin, Copeland^alpha, Bucklin,
// plurality with runoff and STV.  Weighted votes count as weight-many
// copies of the same ballot.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frugal {

using Ranking = std::vector<int>;  // ranking[pos] = candidate index, best first

enum class Errc {
  invalid_election,
  invalid_rule,
  unknown_candidate,
  unknown_target,
  incomplete_ranking,
  parse_error,
  missing_price,
  nonuniform_prices,
  missing_budget,
  unsupported_rule,
  limit_exceeded,
  budget_too_large,
  condition_violated,
  empty_dummy_set,
  trivial_instance,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Bribe price attached to a vote: absent, a finite natural, or infinite.
// Absent and infinite both mean "not purchasable"; they differ only for
// instance validation (dollar variants demand an explicit entry on every
// vulnerable vote).
class Price {
 public:
  constexpr Price() = default;
  static constexpr Price finite(long long amount) { return Price(1, amount); }
  static constexpr Price infinite() { return Price(2, 0); }

  constexpr bool is_set() const { return state_ != 0; }
  constexpr bool is_finite() const { return state_ == 1; }
  constexpr bool is_infinite() const { return state_ == 2; }
  long long amount() const {
    if (state_ != 1) fail(Errc::internal_error, "amount() on non-finite price");
    return amount_;
  }
  friend constexpr bool operator==(const Price& a, const Price& b) {
    return a.state_ == b.state_ && (a.state_ != 1 || a.amount_ == b.amount_);
  }

 private:
  constexpr Price(int state, long long amount) : state_(state), amount_(amount) {}
  int state_ = 0;
  long long amount_ = 0;
};

struct Vote {
  Ranking ranking;
  long long weight = 1;
  Price price;  // unset unless a bribery instance assigns one
};

struct Election {
  std::vector<std::string> candidates;  // unique ids, declaration order
  std::vector<int> tiebreak;            // candidate indices, most preferred first
  std::vector<Vote> votes;

  int num_candidates() const { return static_cast<int>(candidates.size()); }
  int num_votes() const { return static_cast<int>(votes.size()); }

  long long total_weight() const {
    long long w = 0;
    for (const Vote& v : votes) w += v.weight;
    return w;
  }

  int index_of(const std::string& id) const {
    for (int i = 0; i < num_candidates(); ++i)
      if (candidates[i] == id) return i;
    fail(Errc::unknown_candidate, "unknown candidate '" + id + "'");
  }

  std::optional<int> find(const std::string& id) const {
    for (int i = 0; i < num_candidates(); ++i)
      if (candidates[i] == id) return i;
    return std::nullopt;
  }

  // tiebreak_rank[c] = position of candidate c in the tie-break order
  std::vector<int> tiebreak_rank() const {
    std::vector<int> rank(candidates.size(), -1);
    for (int r = 0; r < static_cast<int>(tiebreak.size()); ++r) rank[tiebreak[r]] = r;
    return rank;
  }
};

// Structural validation; throws on violation.  Parsing, instance building
// and the generators all route constructed elections through here.
inline void check_election(const Election& e) {
  const int m = e.num_candidates();
  if (m == 0) fail(Errc::invalid_election, "no candidates");
  for (int i = 0; i < m; ++i) {
    if (e.candidates[i].empty()) fail(Errc::invalid_election, "empty candidate id");
    for (int j = i + 1; j < m; ++j)
      if (e.candidates[i] == e.candidates[j])
        fail(Errc::invalid_election, "duplicate candidate '" + e.candidates[i] + "'");
  }
  std::vector<char> seen(m, 0);
  if (static_cast<int>(e.tiebreak.size()) != m)
    fail(Errc::invalid_election, "tiebreak order must cover every candidate");
  for (int c : e.tiebreak) {
    if (c < 0 || c >= m || seen[c]) fail(Errc::invalid_election, "tiebreak is not a permutation");
    seen[c] = 1;
  }
  if (e.votes.empty()) fail(Errc::invalid_election, "election has no votes");
  for (const Vote& v : e.votes) {
    if (v.weight < 1) fail(Errc::invalid_election, "vote weight must be >= 1");
    if (static_cast<int>(v.ranking.size()) != m)
      fail(Errc::incomplete_ranking, "ranking does not cover every candidate");
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : v.ranking) {
      if (c < 0 || c >= m || seen[c]) fail(Errc::invalid_election, "ranking is not a permutation");
      seen[c] = 1;
    }
  }
}

// Exact rational in [0,1] for the Copeland tie bonus.
struct Rational {
  long long num = 0;
  long long den = 1;
};

inline Rational make_rational(long long num, long long den) {
  if (den <= 0 || num < 0 || num > den) fail(Errc::invalid_rule, "alpha must be a rational in [0,1]");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

enum class RuleKind {
  plurality,
  veto,
  k_approval,
  k_veto,
  borda,
  scoring,
  maximin,
  copeland,
  bucklin,
  runoff,
  stv,
};

struct RuleSpec {
  RuleKind kind = RuleKind::plurality;
  int k = 1;                        // k_approval / k_veto
  Rational alpha;                   // copeland
  std::vector<long long> vector;    // scoring

  RuleSpec() = default;
  explicit RuleSpec(RuleKind kind, int k = 1) : kind(kind), k(k) {}

  static RuleSpec plurality() { return RuleSpec(RuleKind::plurality); }
  static RuleSpec veto() { return RuleSpec(RuleKind::veto); }
  static RuleSpec k_approval(int k) { return RuleSpec(RuleKind::k_approval, k); }
  static RuleSpec k_veto(int k) { return RuleSpec(RuleKind::k_veto, k); }
  static RuleSpec borda() { return RuleSpec(RuleKind::borda); }
  static RuleSpec scoring(std::vector<long long> v) {
    RuleSpec r(RuleKind::scoring);
    r.vector = std::move(v);
    return r;
  }
  static RuleSpec maximin() { return RuleSpec(RuleKind::maximin); }
  static RuleSpec copeland(long long num, long long den) {
    RuleSpec r(RuleKind::copeland);
    r.alpha = make_rational(num, den);
    return r;
  }
  static RuleSpec bucklin() { return RuleSpec(RuleKind::bucklin); }
  static RuleSpec runoff() { return RuleSpec(RuleKind::runoff); }
  static RuleSpec stv() { return RuleSpec(RuleKind::stv); }
};

inline const char* rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::plurality: return "plurality";
    case RuleKind::veto: return "veto";
    case RuleKind::k_approval: return "kapproval";
    case RuleKind::k_veto: return "kveto";
    case RuleKind::borda: return "borda";
    case RuleKind::scoring: return "scoring";
    case RuleKind::maximin: return "maximin";
    case RuleKind::copeland: return "copeland";
    case RuleKind::bucklin: return "bucklin";
    case RuleKind::runoff: return "runoff";
    case RuleKind::stv: return "stv";
  }
  return "?";
}

inline bool is_positional(RuleKind k) {
  switch (k) {
    case RuleKind::plurality:
    case RuleKind::veto:
    case RuleKind::k_approval:
    case RuleKind::k_veto:
    case RuleKind::borda:
    case RuleKind::scoring:
      return true;
    default:
      return false;
  }
}

// Validates rule parameters against an m-candidate election.
inline void check_rule(const RuleSpec& rule, int m) {
  switch (rule.kind) {
    case RuleKind::k_approval:
    case RuleKind::k_veto:
      if (rule.k < 1 || rule.k >= m) fail(Errc::invalid_rule, "k must satisfy 1 <= k < m");
      break;
    case RuleKind::scoring: {
      if (static_cast<int>(rule.vector.size()) != m)
        fail(Errc::invalid_rule, "scoring vector length must equal the candidate count");
      for (size_t i = 0; i + 1 < rule.vector.size(); ++i)
        if (rule.vector[i] < rule.vector[i + 1])
          fail(Errc::invalid_rule, "scoring vector must be nonincreasing");
      if (rule.vector.front() <= rule.vector.back())
        fail(Errc::invalid_rule, "scoring vector must strictly decrease somewhere");
      break;
    }
    case RuleKind::copeland:
      if (rule.alpha.den <= 0) fail(Errc::invalid_rule, "bad alpha");
      break;
    default:
      break;
  }
  if (m < 1) fail(Errc::invalid_rule, "empty candidate set");
}

// Affinely canonical representative of a score vector: subtract the minimum,
// then divide by the gcd of the gaps.  Rejects constant vectors.
inline std::vector<long long> normalize_score_vector(std::vector<long long> v) {
  if (v.empty()) fail(Errc::invalid_rule, "empty score vector");
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) fail(Errc::invalid_rule, "score vector must be nonincreasing");
  if (v.front() <= v.back()) fail(Errc::invalid_rule, "score vector must strictly decrease somewhere");
  const long long lo = v.back();
  long long g = 0;
  for (long long& x : v) {
    x -= lo;
    g = std::gcd(g, x);
  }
  if (g > 1)
    for (long long& x : v) x /= g;
  return v;
}

namespace detail {

// Score vector realizing a positional rule over m candidates.
inline std::vector<long long> score_vector_for(const RuleSpec& rule, int m) {
  std::vector<long long> v(m, 0);
  switch (rule.kind) {
    case RuleKind::plurality:
      v[0] = 1;
      break;
    case RuleKind::veto:
      v[m - 1] = -1;
      break;
    case RuleKind::k_approval:
      for (int i = 0; i < rule.k; ++i) v[i] = 1;
      break;
    case RuleKind::k_veto:
      for (int i = m - rule.k; i < m; ++i) v[i] = -1;
      break;
    case RuleKind::borda:
      for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
      break;
    case RuleKind::scoring:
      return rule.vector;
    default:
      fail(Errc::internal_error, "score_vector_for on non-positional rule");
  }
  return v;
}

}  // namespace detail

struct MarginMatrix {
  int m = 0;
  std::vector<long long> d;  // row-major, d[x*m+y] = D(x,y)

  long long at(int x, int y) const { return d[static_cast<size_t>(x) * m + y]; }
  long long& at(int x, int y) { return d[static_cast<size_t>(x) * m + y]; }
};

// Weighted pairwise margins D(x,y) = N(x,y) - N(y,x).
inline MarginMatrix majority_graph(const Election& e) {
  const int m = e.num_candidates();
  MarginMatrix mm;
  mm.m = m;
  mm.d.assign(static_cast<size_t>(m) * m, 0);
  std::vector<int> pos(m);
  for (const Vote& v : e.votes) {
    for (int p = 0; p < m; ++p) pos[v.ranking[p]] = p;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        const long long s = pos[x] < pos[y] ? v.weight : -v.weight;
        mm.at(x, y) += s;
        mm.at(y, x) -= s;
      }
  }
  return mm;
}

// score(c) = sum over votes of weight * vector[position of c]
inline std::vector<long long> positional_scores(const Election& e,
                                                const std::vector<long long>& vector) {
  const int m = e.num_candidates();
  if (static_cast<int>(vector.size()) != m)
    fail(Errc::invalid_rule, "score vector length must equal the candidate count");
  std::vector<long long> s(m, 0);
  for (const Vote& v : e.votes)
    for (int p = 0; p < m; ++p) s[v.ranking[p]] += v.weight * vector[p];
  return s;
}

namespace detail {

inline int tb_min(const std::vector<int>& set, const std::vector<int>& tb_rank) {
  int best = set.front();
  for (int c : set)
    if (tb_rank[c] < tb_rank[best]) best = c;
  return best;
}

inline std::vector<int> argmax_set(const std::vector<long long>& s) {
  std::vector<int> out;
  long long best = s[0];
  for (long long x : s) best = std::max(best, x);
  for (int c = 0; c < static_cast<int>(s.size()); ++c)
    if (s[c] == best) out.push_back(c);
  return out;
}

inline std::vector<long long> maximin_scores(const MarginMatrix& d) {
  const int m = d.m;
  std::vector<long long> s(m);
  for (int x = 0; x < m; ++x) {
    long long lo = (m == 1) ? 0 : d.at(x, (x + 1) % m);
    for (int y = 0; y < m; ++y)
      if (y != x) lo = std::min(lo, d.at(x, y));
    s[x] = lo;
  }
  return s;
}

// Copeland^alpha scores mapped to integers: wins*den + ties*num preserves
// the order of wins + alpha*ties because den > 0.
inline std::vector<long long> copeland_keys(const MarginMatrix& d, const Rational& alpha) {
  const int m = d.m;
  std::vector<long long> s(m, 0);
  for (int x = 0; x < m; ++x) {
    long long wins = 0, ties = 0;
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      if (d.at(x, y) > 0) ++wins;
      else if (d.at(x, y) == 0) ++ties;
    }
    s[x] = wins * alpha.den + ties * alpha.num;
  }
  return s;
}

// Least depth at which each candidate holds a strict majority of the total
// vote weight.  Always <= m.
inline std::vector<int> bucklin_depths(const Election& e) {
  const int m = e.num_candidates();
  const long long total = e.total_weight();
  std::vector<long long> cnt(m, 0);
  std::vector<int> depth(m, m);
  for (int l = 0; l < m; ++l) {
    for (const Vote& v : e.votes) cnt[v.ranking[l]] += v.weight;
    for (int c = 0; c < m; ++c)
      if (depth[c] == m && 2 * cnt[c] > total) depth[c] = l + 1;
  }
  return depth;
}

// Plurality scores restricted to the non-eliminated candidates: each vote's
// weight goes to its best remaining candidate.
inline void top_choice_scores(const Election& e, const std::vector<char>& alive,
                              std::vector<long long>& s) {
  std::fill(s.begin(), s.end(), 0);
  for (const Vote& v : e.votes)
    for (int c : v.ranking)
      if (alive[c]) {
        s[c] += v.weight;
        break;
      }
}

inline int stv_winner(const Election& e, const std::vector<int>& tb_rank) {
  const int m = e.num_candidates();
  std::vector<char> alive(m, 1);
  std::vector<long long> s(m);
  for (int round = 0; round + 1 < m; ++round) {
    top_choice_scores(e, alive, s);
    // drop the lowest score; among ties the candidate least preferred by
    // the tie-break order goes first
    int drop = -1;
    for (int c = 0; c < m; ++c) {
      if (!alive[c]) continue;
      if (drop == -1 || s[c] < s[drop] || (s[c] == s[drop] && tb_rank[c] > tb_rank[drop]))
        drop = c;
    }
    alive[drop] = 0;
  }
  for (int c = 0; c < m; ++c)
    if (alive[c]) return c;
  fail(Errc::internal_error, "stv left no candidate");
}

// The two plurality leaders: sort by score descending, then tie-break order.
inline std::pair<int, int> runoff_leaders(const std::vector<long long>& s,
                                          const std::vector<int>& tb_rank) {
  const int m = static_cast<int>(s.size());
  int first = -1, second = -1;
  auto better = [&](int a, int b) {
    return s[a] > s[b] || (s[a] == s[b] && tb_rank[a] < tb_rank[b]);
  };
  for (int c = 0; c < m; ++c) {
    if (first == -1 || better(c, first)) {
      second = first;
      first = c;
    } else if (second == -1 || better(c, second)) {
      second = c;
    }
  }
  return {first, second};
}

inline int runoff_winner_from(const std::vector<long long>& plu, const MarginMatrix& d,
                              const std::vector<int>& tb_rank) {
  if (d.m == 1) return 0;
  auto [x, y] = runoff_leaders(plu, tb_rank);
  const long long g = d.at(x, y);
  if (g > 0) return x;
  if (g < 0) return y;
  return tb_rank[x] < tb_rank[y] ? x : y;
}

// Co-winner set before tie-breaking.  Runoff and STV resolve ties inside
// the rule itself, so their set is the singleton winner.
inline std::vector<int> co_winners(const Election& e, const RuleSpec& rule) {
  const std::vector<int> tb_rank = e.tiebreak_rank();
  switch (rule.kind) {
    case RuleKind::maximin:
      return argmax_set(maximin_scores(majority_graph(e)));
    case RuleKind::copeland:
      return argmax_set(copeland_keys(majority_graph(e), rule.alpha));
    case RuleKind::bucklin: {
      const std::vector<int> depth = bucklin_depths(e);
      int best = depth[0];
      for (int d : depth) best = std::min(best, d);
      std::vector<int> out;
      for (int c = 0; c < static_cast<int>(depth.size()); ++c)
        if (depth[c] == best) out.push_back(c);
      return out;
    }
    case RuleKind::runoff: {
      const std::vector<long long> plu =
          positional_scores(e, score_vector_for(RuleSpec::plurality(), e.num_candidates()));
      return {runoff_winner_from(plu, majority_graph(e), tb_rank)};
    }
    case RuleKind::stv:
      return {stv_winner(e, tb_rank)};
    default:
      return argmax_set(positional_scores(e, score_vector_for(rule, e.num_candidates())));
  }
}

}  // namespace detail

// Unique winner: the tie-break-preferred member of the rule's co-winner set.
inline int compute_winner(const Election& e, const RuleSpec& rule) {
  check_rule(rule, e.num_candidates());
  const std::vector<int> set = detail::co_winners(e, rule);
  return detail::tb_min(set, e.tiebreak_rank());
}

}  // namespace frugal
