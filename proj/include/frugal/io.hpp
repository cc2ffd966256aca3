#pragma once
// Text formats: election documents, partition and exact-cover sources,
// rule descriptors, solutions, certificates and verification reports.
// Serialization is canonical so identical inputs produce byte-identical
// output.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "frugal/core.hpp"
#include "frugal/oracles.hpp"
#include "frugal/reductions.hpp"
#include "frugal/solvers.hpp"
#include "frugal/vulnerability.hpp"

namespace frugal {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(std::string(trim(s.substr(start, end - start))));
    start = end + 1;
  }
  if (!out.empty() && out.back().empty() && s.empty()) out.pop_back();
  return out;
}

inline long long parse_int(std::string_view s, int line) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(Errc::parse_error, "line " + std::to_string(line) + ": expected an integer, got '" +
                                std::string(s) + "'");
  return v;
}

// Lines of a document with their 1-based numbers, comments and blanks gone.
inline std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int ln = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++ln;
    std::string_view line = text.substr(start, end - start);
    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({ln, std::string(line)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rule descriptors: plurality | veto | kapproval:K | kveto:K | borda |
// scoring:a1,a2,... | maximin | copeland:NUM/DEN | bucklin | runoff | stv

inline RuleSpec parse_rule(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const size_t colon = s.find(':');
  const std::string head(colon == std::string_view::npos ? s : s.substr(0, colon));
  const std::string arg(colon == std::string_view::npos ? "" : detail::trim(s.substr(colon + 1)));
  auto need_arg = [&](const char* what) {
    if (arg.empty()) fail(Errc::parse_error, std::string("rule ") + head + " needs " + what);
  };
  if (head == "plurality") return RuleSpec::plurality();
  if (head == "veto") return RuleSpec::veto();
  if (head == "borda") return RuleSpec::borda();
  if (head == "maximin") return RuleSpec::maximin();
  if (head == "bucklin") return RuleSpec::bucklin();
  if (head == "runoff") return RuleSpec::runoff();
  if (head == "stv") return RuleSpec::stv();
  if (head == "kapproval") {
    need_arg("k");
    return RuleSpec::k_approval(static_cast<int>(detail::parse_int(arg, 0)));
  }
  if (head == "kveto") {
    need_arg("k");
    return RuleSpec::k_veto(static_cast<int>(detail::parse_int(arg, 0)));
  }
  if (head == "copeland") {
    if (arg.empty()) return RuleSpec::copeland(0, 1);
    const size_t slash = arg.find('/');
    if (slash == std::string::npos) fail(Errc::parse_error, "copeland alpha must be NUM/DEN");
    return RuleSpec::copeland(detail::parse_int(arg.substr(0, slash), 0),
                              detail::parse_int(arg.substr(slash + 1), 0));
  }
  if (head == "scoring") {
    need_arg("a vector");
    std::vector<long long> v;
    for (const std::string& part : detail::split(arg, ',')) v.push_back(detail::parse_int(part, 0));
    return RuleSpec::scoring(std::move(v));
  }
  fail(Errc::parse_error, "unknown rule '" + std::string(s) + "'");
}

inline std::string format_rule(const RuleSpec& rule) {
  switch (rule.kind) {
    case RuleKind::k_approval: return "kapproval:" + std::to_string(rule.k);
    case RuleKind::k_veto: return "kveto:" + std::to_string(rule.k);
    case RuleKind::copeland:
      return "copeland:" + std::to_string(rule.alpha.num) + "/" + std::to_string(rule.alpha.den);
    case RuleKind::scoring: {
      std::string out = "scoring:";
      for (size_t i = 0; i < rule.vector.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rule.vector[i]);
      }
      return out;
    }
    default: return rule_kind_name(rule.kind);
  }
}

// ---------------------------------------------------------------------------
// Election documents
//
//   # comment
//   candidates: p,a,b
//   tiebreak: a>b>p
//   vote: a>b>p
//   vote [weight=3] [price=2]: p>a>b
//   vote [price=inf]: b>p>a

inline Election parse_election(std::string_view text) {
  Election e;
  bool have_candidates = false, have_tiebreak = false;
  for (const auto& [ln, line] : detail::content_lines(text)) {
    const size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(Errc::parse_error, "line " + std::to_string(ln) + ": expected 'key: value'");
    std::string key(detail::trim(std::string_view(line).substr(0, colon)));
    const std::string_view value = detail::trim(std::string_view(line).substr(colon + 1));

    long long weight = 1;
    Price price;
    if (key.rfind("vote", 0) == 0 && key != "vote") {
      // attributes: vote [weight=3] [price=2]
      std::string_view attrs = detail::trim(std::string_view(key).substr(4));
      while (!attrs.empty()) {
        if (attrs.front() != '[')
          fail(Errc::parse_error, "line " + std::to_string(ln) + ": bad vote attribute");
        const size_t close = attrs.find(']');
        if (close == std::string_view::npos)
          fail(Errc::parse_error, "line " + std::to_string(ln) + ": unterminated attribute");
        std::string_view attr = attrs.substr(1, close - 1);
        const size_t eq = attr.find('=');
        if (eq == std::string_view::npos)
          fail(Errc::parse_error, "line " + std::to_string(ln) + ": attribute needs key=value");
        const std::string_view akey = detail::trim(attr.substr(0, eq));
        const std::string_view aval = detail::trim(attr.substr(eq + 1));
        if (akey == "weight") {
          weight = detail::parse_int(aval, ln);
        } else if (akey == "price") {
          price = aval == "inf" ? Price::infinite()
                                : Price::finite(detail::parse_int(aval, ln));
        } else {
          fail(Errc::parse_error, "line " + std::to_string(ln) + ": unknown attribute '" +
                                      std::string(akey) + "'");
        }
        attrs = detail::trim(attrs.substr(close + 1));
      }
      key = "vote";
    }

    if (key == "candidates") {
      if (have_candidates) fail(Errc::parse_error, "line " + std::to_string(ln) + ": duplicate candidates line");
      for (const std::string& name : detail::split(value, ',')) {
        if (name.empty()) fail(Errc::parse_error, "line " + std::to_string(ln) + ": empty candidate name");
        e.candidates.push_back(name);
      }
      have_candidates = true;
    } else if (key == "tiebreak") {
      if (!have_candidates) fail(Errc::parse_error, "line " + std::to_string(ln) + ": tiebreak before candidates");
      for (const std::string& name : detail::split(value, '>')) {
        const auto idx = e.find(name);
        if (!idx) fail(Errc::unknown_candidate, "line " + std::to_string(ln) + ": unknown candidate '" + name + "'");
        e.tiebreak.push_back(*idx);
      }
      have_tiebreak = true;
    } else if (key == "vote") {
      if (!have_candidates) fail(Errc::parse_error, "line " + std::to_string(ln) + ": vote before candidates");
      Ranking r;
      for (const std::string& name : detail::split(value, '>')) {
        const auto idx = e.find(name);
        if (!idx) fail(Errc::unknown_candidate, "line " + std::to_string(ln) + ": unknown candidate '" + name + "'");
        r.push_back(*idx);
      }
      if (static_cast<int>(r.size()) != e.num_candidates())
        fail(Errc::incomplete_ranking,
             "line " + std::to_string(ln) + ": ranking must list every candidate exactly once");
      if (weight < 1) fail(Errc::parse_error, "line " + std::to_string(ln) + ": weight must be >= 1");
      if (price.is_finite() && price.amount() < 0)
        fail(Errc::parse_error, "line " + std::to_string(ln) + ": price must be a natural number");
      e.votes.push_back({std::move(r), weight, price});
    } else {
      fail(Errc::parse_error, "line " + std::to_string(ln) + ": unknown key '" + key + "'");
    }
  }
  if (!have_candidates) fail(Errc::parse_error, "document has no candidates line");
  if (!have_tiebreak)
    for (int c = 0; c < e.num_candidates(); ++c) e.tiebreak.push_back(c);
  check_election(e);
  return e;
}

inline std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "candidates: ";
  for (int c = 0; c < e.num_candidates(); ++c) {
    if (c) out << ",";
    out << e.candidates[c];
  }
  out << "\ntiebreak: ";
  for (size_t i = 0; i < e.tiebreak.size(); ++i) {
    if (i) out << ">";
    out << e.candidates[e.tiebreak[i]];
  }
  out << "\n";
  for (const Vote& v : e.votes) {
    out << "vote";
    if (v.weight != 1) out << " [weight=" << v.weight << "]";
    if (v.price.is_set()) {
      out << " [price=";
      if (v.price.is_infinite())
        out << "inf";
      else
        out << v.price.amount();
      out << "]";
    }
    out << ": ";
    for (size_t i = 0; i < v.ranking.size(); ++i) {
      if (i) out << ">";
      out << e.candidates[v.ranking[i]];
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Partition documents:  weights: 1,1,2

inline PartitionInstance parse_partition(std::string_view text, PartitionInstance::Kind kind) {
  PartitionInstance out;
  out.kind = kind;
  bool have = false;
  for (const auto& [ln, line] : detail::content_lines(text)) {
    const size_t colon = line.find(':');
    if (colon == std::string::npos || detail::trim(std::string_view(line).substr(0, colon)) != "weights")
      fail(Errc::parse_error, "line " + std::to_string(ln) + ": expected 'weights: ...'");
    if (have) fail(Errc::parse_error, "line " + std::to_string(ln) + ": duplicate weights line");
    for (const std::string& part : detail::split(detail::trim(std::string_view(line).substr(colon + 1)), ','))
      out.weights.push_back(detail::parse_int(part, ln));
    have = true;
  }
  if (!have) fail(Errc::parse_error, "document has no weights line");
  check_partition(out);
  return out;
}

inline std::string serialize_partition(const PartitionInstance& src) {
  std::ostringstream out;
  out << "weights: ";
  for (size_t i = 0; i < src.weights.size(); ++i) {
    if (i) out << ",";
    out << src.weights[i];
  }
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Exact-cover documents:
//   universe: 1,2,3
//   set: 1,2,3

inline X3CInstance parse_x3c(std::string_view text) {
  X3CInstance out;
  bool have_universe = false;
  for (const auto& [ln, line] : detail::content_lines(text)) {
    const size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(Errc::parse_error, "line " + std::to_string(ln) + ": expected 'key: value'");
    const std::string_view key = detail::trim(std::string_view(line).substr(0, colon));
    const std::string_view value = detail::trim(std::string_view(line).substr(colon + 1));
    if (key == "universe") {
      if (have_universe) fail(Errc::parse_error, "line " + std::to_string(ln) + ": duplicate universe");
      for (const std::string& name : detail::split(value, ',')) out.universe.push_back(name);
      have_universe = true;
    } else if (key == "set") {
      if (!have_universe) fail(Errc::parse_error, "line " + std::to_string(ln) + ": set before universe");
      const std::vector<std::string> parts = detail::split(value, ',');
      if (parts.size() != 3)
        fail(Errc::parse_error, "line " + std::to_string(ln) + ": sets have exactly three elements");
      std::array<int, 3> s{};
      for (int i = 0; i < 3; ++i) {
        int idx = -1;
        for (size_t u = 0; u < out.universe.size(); ++u)
          if (out.universe[u] == parts[i]) idx = static_cast<int>(u);
        if (idx < 0)
          fail(Errc::parse_error, "line " + std::to_string(ln) + ": unknown element '" + parts[i] + "'");
        s[i] = idx;
      }
      std::sort(s.begin(), s.end());
      out.sets.push_back(s);
    } else {
      fail(Errc::parse_error, "line " + std::to_string(ln) + ": unknown key '" + std::string(key) + "'");
    }
  }
  check_x3c(out);
  return out;
}

inline std::string serialize_x3c(const X3CInstance& src) {
  std::ostringstream out;
  out << "universe: ";
  for (size_t i = 0; i < src.universe.size(); ++i) {
    if (i) out << ",";
    out << src.universe[i];
  }
  out << "\n";
  for (const auto& s : src.sets)
    out << "set: " << src.universe[s[0]] << "," << src.universe[s[1]] << "," << src.universe[s[2]]
        << "\n";
  return out.str();
}

// Manipulation documents reuse the election grammar plus a manipulators line.
inline CmInstance parse_cm(std::string_view text, const std::string& target) {
  std::string election_text;
  int manipulators = -1;
  for (const auto& [ln, line] : detail::content_lines(text)) {
    const size_t colon = line.find(':');
    if (colon != std::string::npos &&
        detail::trim(std::string_view(line).substr(0, colon)) == "manipulators") {
      manipulators =
          static_cast<int>(detail::parse_int(detail::trim(std::string_view(line).substr(colon + 1)), ln));
      continue;
    }
    election_text += line;
    election_text += "\n";
  }
  if (manipulators < 0) fail(Errc::parse_error, "document has no manipulators line");
  const Election e = parse_election(election_text);
  CmInstance out;
  out.candidates = e.candidates;
  for (const Vote& v : e.votes) {
    if (v.weight != 1) fail(Errc::parse_error, "manipulation sources are unweighted");
    out.truthful.push_back(v.ranking);
  }
  out.manipulators = manipulators;
  out.target = e.index_of(target);
  check_cm(out);
  return out;
}

// ---------------------------------------------------------------------------
// Solutions, certificates, reports

inline std::string serialize_solution(const Solution& sol, const Election& e,
                                      const std::string& algorithm) {
  std::ostringstream out;
  out << "decision: " << (sol.yes ? "yes" : "no") << "\n";
  out << "algorithm: " << algorithm << "\n";
  if (sol.yes) {
    out << "cost: " << sol.cost << "\n";
    out << "changes: " << sol.changes.size() << "\n";
    for (const auto& [idx, ranking] : sol.changes) {
      out << "change " << idx << ": ";
      for (size_t i = 0; i < ranking.size(); ++i) {
        if (i) out << ">";
        out << e.candidates[ranking[i]];
      }
      out << "\n";
    }
  }
  return out.str();
}

inline std::string serialize_certificate(const ReductionOutput& out) {
  const Election& e = out.instance.election;
  std::ostringstream os;
  os << "reduction: " << out.name << "\n";
  os << "rule: " << format_rule(out.instance.rule) << "\n";
  os << "target: " << e.candidates[out.instance.target] << "\n";
  os << "variant: " << variant_name(out.instance.variant) << "\n";
  if (out.instance.budget) os << "budget: " << *out.instance.budget << "\n";
  os << "expected-winner: " << e.candidates[out.expected_winner] << "\n";
  os << "vulnerable:";
  for (size_t i = 0; i < out.expected_vulnerable.size(); ++i)
    os << (i ? "," : " ") << out.expected_vulnerable[i];
  os << "\n";
  for (size_t i = 0; i < out.source_votes.size(); ++i)
    os << "source " << i << ": vote " << out.source_votes[i] << "\n";
  if (out.lambda) os << "lambda: " << *out.lambda << "\n";
  for (const ScoreRelation& r : out.score_relations)
    os << "relation: s(" << e.candidates[r.a] << ")-s(" << e.candidates[r.b] << ") "
       << (r.exact ? "=" : ">=") << " " << r.diff << "\n";
  return os.str();
}

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::failed: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

inline std::string serialize_report(const VerificationReport& rep) {
  std::ostringstream os;
  os << "reduction: " << rep.reduction << "\n";
  os << "source: " << (rep.source_yes ? "yes" : "no") << "\n";
  for (const CheckResult& c : rep.checks) {
    os << "check " << c.name << ": " << check_status_name(c.status);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << "overall: " << (rep.overall_pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace frugal
