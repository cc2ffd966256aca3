#pragma once
// Vulnerable-vote classification and bribery instance assembly.  A vote is
// vulnerable with respect to a target candidate when it ranks the target
// strictly above the current winner; those are the only votes a briber may
// touch.

#include <map>
#include <string>
#include <vector>

#include "frugal/core.hpp"

namespace frugal {

enum class VoteLabel { non_vulnerable, vulnerable };

enum class Variant { frugal, dollar_uniform, dollar_nonuniform };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::frugal: return "frugal";
    case Variant::dollar_uniform: return "uniform";
    case Variant::dollar_nonuniform: return "nonuniform";
  }
  return "?";
}

inline bool is_dollar(Variant v) { return v != Variant::frugal; }

// Label each vote; if the target already wins, nothing is vulnerable.
inline std::vector<VoteLabel> classify_vulnerable(const Election& e, const RuleSpec& rule,
                                                  int target) {
  if (target < 0 || target >= e.num_candidates())
    fail(Errc::unknown_target, "target candidate out of range");
  const int winner = compute_winner(e, rule);
  std::vector<VoteLabel> labels(e.votes.size(), VoteLabel::non_vulnerable);
  if (winner == target) return labels;
  for (size_t i = 0; i < e.votes.size(); ++i) {
    for (int c : e.votes[i].ranking) {
      if (c == target) {
        labels[i] = VoteLabel::vulnerable;
        break;
      }
      if (c == winner) break;
    }
  }
  return labels;
}

inline std::vector<int> vulnerable_indices(const std::vector<VoteLabel>& labels) {
  std::vector<int> out;
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == VoteLabel::vulnerable) out.push_back(static_cast<int>(i));
  return out;
}

struct BriberyInstance {
  Election election;  // vote prices live on the votes
  RuleSpec rule;
  int target = 0;
  std::optional<long long> budget;  // required for dollar variants
  Variant variant = Variant::frugal;
};

// Validates target, prices and budget against the variant rules.  Prices on
// non-vulnerable votes are allowed and ignored; a dollar-variant instance
// must carry an explicit price (finite or infinite) on every vulnerable vote,
// and the uniform variant demands all finite vulnerable prices equal.
inline void check_instance(const BriberyInstance& inst) {
  check_election(inst.election);
  check_rule(inst.rule, inst.election.num_candidates());
  if (inst.target < 0 || inst.target >= inst.election.num_candidates())
    fail(Errc::unknown_target, "target candidate out of range");
  if (!is_dollar(inst.variant)) return;
  if (!inst.budget.has_value()) fail(Errc::missing_budget, "dollar variant requires a budget");
  if (*inst.budget < 0) fail(Errc::missing_budget, "budget must be a natural number");
  const std::vector<VoteLabel> labels =
      classify_vulnerable(inst.election, inst.rule, inst.target);
  std::optional<long long> uniform;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != VoteLabel::vulnerable) continue;
    const Price& p = inst.election.votes[i].price;
    if (!p.is_set())
      fail(Errc::missing_price, "vulnerable vote " + std::to_string(i) + " has no price");
    if (p.is_finite()) {
      if (p.amount() < 0) fail(Errc::missing_price, "prices must be natural numbers");
      if (inst.variant == Variant::dollar_uniform) {
        if (uniform && *uniform != p.amount())
          fail(Errc::nonuniform_prices, "uniform variant with unequal finite prices");
        uniform = p.amount();
      }
    }
  }
}

// Assembles and validates an instance from an election plus a price map
// (vote index -> price).  Prices already on the election are kept unless
// overridden.
inline BriberyInstance build_instance(Election election, RuleSpec rule, int target,
                                      const std::map<int, Price>& prices,
                                      std::optional<long long> budget, Variant variant) {
  for (const auto& [idx, price] : prices) {
    if (idx < 0 || idx >= election.num_votes())
      fail(Errc::parse_error, "price entry for nonexistent vote " + std::to_string(idx));
    election.votes[idx].price = price;
  }
  BriberyInstance inst{std::move(election), std::move(rule), target, budget, variant};
  check_instance(inst);
  return inst;
}

}  // namespace frugal
