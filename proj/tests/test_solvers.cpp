#include <catch2/catch.hpp>

#include "helpers.hpp"

using namespace frugal;
using namespace testutil;

namespace {

// Random dollar instance: finite prices 0..3 on most vulnerable votes, a few
// infinite, budget 0..4.
BriberyInstance random_dollar_instance(Rng& rng, int m, int n, bool uniform) {
  while (true) {
    Election e = random_election(rng, m, n, 1);
    const int target = rng.below(m);
    const long long unit = 1 + rng.below(3);
    for (int i = 0; i < e.num_votes(); ++i) {
      if (rng.below(5) == 0) {
        e.votes[i].price = Price::infinite();
      } else {
        e.votes[i].price = Price::finite(uniform ? unit : rng.below(4));
      }
    }
    BriberyInstance inst{std::move(e), RuleSpec::plurality(), target,
                         static_cast<long long>(rng.below(5)),
                         uniform ? Variant::dollar_uniform : Variant::dollar_nonuniform};
    try {
      check_instance(inst);
      return inst;
    } catch (const Error&) {
      continue;  // uniform draw clashed; retry
    }
  }
}

void require_valid_yes(const BriberyInstance& inst, const Solution& sol) {
  const auto bad = check_solution(inst, sol);
  CAPTURE(bad);
  REQUIRE(bad.empty());
}

}  // namespace

TEST_CASE("solve_exact spec examples") {
  SECTION("target already the winner") {
    const Election e = make_election({"p", "a"}, {{{0, 1}, 1}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 0, std::nullopt, Variant::frugal};
    const Solution sol = solve_exact(inst);
    CHECK(sol.yes);
    CHECK(sol.changes.empty());
    CHECK(sol.cost == 0);
  }
  SECTION("one vulnerable vote cannot overcome a two-point lead") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 1, 2}, 1}, {{0, 1, 2}, 1}, {{1, 2, 0}, 1}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 2, std::nullopt, Variant::frugal};
    CHECK_FALSE(solve_exact(inst).yes);
  }
  SECTION("retopping one vulnerable vote suffices") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 2, 1}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 2, std::nullopt, Variant::frugal};
    const Solution sol = solve_exact(inst);
    REQUIRE(sol.yes);
    CHECK(sol.changes.size() == 1);
    require_valid_yes(inst, sol);
  }
  SECTION("caps raise limit errors") {
    Rng rng(5);
    const Election e = random_election(rng, 5, 2, 1);
    const BriberyInstance inst{e, RuleSpec::borda(), 0, std::nullopt, Variant::frugal};
    CHECK_THROWS_AS(solve_exact(inst), Error);
  }
}

TEST_CASE("solve_exact yields valid minimal witnesses") {
  Rng rng(47);
  for (int it = 0; it < 150; ++it) {
    const int m = 2 + rng.below(3);
    const Election e = random_election(rng, m, 1 + rng.below(4), 2);
    const int target = rng.below(m);
    const BriberyInstance inst{e, RuleSpec::borda(), target, std::nullopt, Variant::frugal};
    const Solution sol = solve_exact(inst);
    if (sol.yes) require_valid_yes(inst, sol);
  }
}

TEST_CASE("cm_greedy k-approval spreads approvals under the caps") {
  // fixed approvals: p 1, a 3, b 2, c 2; two free votes; p first in tie-break
  const Election fixed = make_election(
      {"p", "a", "b", "c"},
      {{{1, 0, 2, 3}, 1}, {{1, 2, 0, 3}, 1}, {{1, 3, 0, 2}, 1}, {{2, 3, 0, 1}, 1}});
  const auto res = cm_greedy(fixed, RuleSpec::k_approval(2), {1, 1}, 0);
  REQUIRE(res.has_value());
  REQUIRE(res->size() == 2);
  CHECK((*res)[0][0] == 0);
  CHECK((*res)[0][1] == 2);  // approve b first (larger remaining headroom)
  CHECK((*res)[1][0] == 0);
  CHECK((*res)[1][1] == 3);  // then c
}

TEST_CASE("cm_greedy with no free votes decides by the fixed winner") {
  const Election fixed = make_election({"p", "a"}, {{{0, 1}, 1}});
  const auto res = cm_greedy(fixed, RuleSpec::plurality(), {}, 0);
  REQUIRE(res.has_value());
  CHECK(res->empty());
  CHECK_FALSE(cm_greedy(fixed, RuleSpec::plurality(), {}, 1).has_value());
}

TEST_CASE("cm_greedy weighted maximin with three candidates") {
  const Election fixed = make_election({"p", "a", "b"}, {{{1, 2, 0}, 2}}, {0, 1, 2});
  const auto res = cm_greedy(fixed, RuleSpec::maximin(), {1, 1, 1}, 0);
  REQUIRE(res.has_value());
  for (const Ranking& r : *res) CHECK(r == Ranking{0, 2, 1});  // p > b > a
}

TEST_CASE("cm_greedy rejects unsupported rules") {
  const Election fixed = make_election({"p", "a"}, {{{0, 1}, 1}});
  CHECK_THROWS_AS(cm_greedy(fixed, RuleSpec::borda(), {1}, 0), Error);
  CHECK_THROWS_AS(cm_greedy(fixed, RuleSpec::stv(), {1}, 0), Error);
}

TEST_CASE("solve_frugal_poly matches the exact solver") {
  SECTION("spec plurality instance") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 2, 1}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 2, std::nullopt, Variant::frugal};
    const Solution sol = solve_frugal_poly(inst);
    REQUIRE(sol.yes);
    require_valid_yes(inst, sol);
  }
  SECTION("nothing changeable means no") {
    const Election e = make_election({"a", "p", "b"}, {{{0, 1, 2}, 1}, {{0, 1, 2}, 1}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 1, std::nullopt, Variant::frugal};
    CHECK_FALSE(solve_frugal_poly(inst).yes);
    CHECK_FALSE(solve_exact(inst).yes);
  }
  SECTION("bucklin example agrees with the oracle") {
    const Election e = make_election(
        {"a", "p", "b"},
        {{{0, 1, 2}, 1}, {{0, 1, 2}, 1}, {{1, 0, 2}, 1}, {{2, 1, 0}, 1}},
        {0, 2, 1});
    const BriberyInstance inst{e, RuleSpec::bucklin(), 1, std::nullopt, Variant::frugal};
    CHECK(solve_frugal_poly(inst).yes == solve_exact(inst).yes);
  }
  SECTION("random agreement across the covered rules") {
    Rng rng(53);
    const std::vector<RuleSpec> rules = {RuleSpec::plurality(), RuleSpec::veto(),
                                         RuleSpec::k_approval(2), RuleSpec::k_veto(2),
                                         RuleSpec::bucklin(), RuleSpec::runoff()};
    for (int it = 0; it < 120; ++it) {
      const int m = 3 + rng.below(2);
      const Election e = random_election(rng, m, 1 + rng.below(4), 1);
      const int target = rng.below(m);
      for (const RuleSpec& rule : rules) {
        const BriberyInstance inst{e, rule, target, std::nullopt, Variant::frugal};
        const Solution poly = solve_frugal_poly(inst);
        const Solution exact = solve_exact(inst);
        CAPTURE(it, rule_kind_name(rule.kind), target);
        REQUIRE(poly.yes == exact.yes);
        if (poly.yes) require_valid_yes(inst, poly);
      }
    }
  }
}

TEST_CASE("solve_dollar_plurality buys the cheapest flips") {
  // winner w; three purchasable x-topped votes priced 1,1,5; p needs two
  const Election e = make_election(
      {"w", "x", "p"},
      {{{0, 1, 2}, 1}, {{0, 1, 2}, 1}, {{0, 1, 2}, 1},            // w's base
       {{1, 2, 0}, 1}, {{1, 2, 0}, 1}, {{1, 2, 0}, 1},            // x > p > w (vulnerable)
       {{2, 1, 0}, 1}},                                           // p's own vote
      {2, 0, 1});  // tiebreak p > w > x
  std::map<int, Price> prices{{3, Price::finite(1)},
                              {4, Price::finite(1)},
                              {5, Price::finite(5)},
                              {6, Price::infinite()}};
  SECTION("budget two suffices at cost two") {
    const BriberyInstance inst = build_instance(e, RuleSpec::plurality(), 2, prices, 2,
                                                Variant::dollar_nonuniform);
    const Solution sol = solve_dollar_plurality(inst);
    REQUIRE(sol.yes);
    CHECK(sol.cost == 2);
    require_valid_yes(inst, sol);
    const Solution exact = solve_exact(inst);
    CHECK(exact.yes);
    CHECK(exact.cost == 2);
  }
  SECTION("budget one fails") {
    const BriberyInstance inst = build_instance(e, RuleSpec::plurality(), 2, prices, 1,
                                                Variant::dollar_nonuniform);
    CHECK_FALSE(solve_dollar_plurality(inst).yes);
    CHECK_FALSE(solve_exact(inst).yes);
  }
  SECTION("budget zero with the target already winning") {
    const Election won = make_election({"p", "a"}, {{{0, 1}, 1}});
    const BriberyInstance inst = build_instance(won, RuleSpec::plurality(), 0, {}, 0,
                                                Variant::dollar_nonuniform);
    const Solution sol = solve_dollar_plurality(inst);
    CHECK(sol.yes);
    CHECK(sol.cost == 0);
  }
  SECTION("random agreement with the oracle") {
    Rng rng(59);
    for (int it = 0; it < 250; ++it) {
      const BriberyInstance inst = random_dollar_instance(rng, 3 + rng.below(2), 2 + rng.below(4),
                                                          rng.below(2) == 0);
      const Solution fast = solve_dollar_plurality(inst);
      const Solution exact = solve_exact(inst);
      CAPTURE(it);
      REQUIRE(fast.yes == exact.yes);
      if (fast.yes) {
        REQUIRE(fast.cost == exact.cost);
        require_valid_yes(inst, fast);
      }
    }
  }
}

TEST_CASE("solve_dollar_veto reassigns vetoes at minimum cost") {
  SECTION("already enough vetoes everywhere") {
    // p unvetoed; a and b each vetoed once; p wins outright
    const Election e = make_election({"p", "a", "b"},
                                     {{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 1}});
    const BriberyInstance inst = build_instance(e, RuleSpec::veto(), 0, {}, 0,
                                                Variant::dollar_nonuniform);
    const Solution sol = solve_dollar_veto(inst);
    CHECK(sol.yes);
    CHECK(sol.cost == 0);
  }
  SECTION("budget below the cheapest reassignment") {
    // winner a; a needs one more veto; the b-topped group offers moves at
    // prices 3, 2 and 5 while the cheap price-1 vote sits in a's own group
    const Election e = make_election(
        {"a", "b", "p"},
        {{{0, 1, 2}, 1}, {{2, 0, 1}, 1}, {{2, 0, 1}, 1}, {{2, 0, 1}, 1}, {{2, 1, 0}, 1}});
    std::map<int, Price> prices{{1, Price::finite(3)},
                                {2, Price::finite(2)},
                                {3, Price::finite(5)},
                                {4, Price::finite(1)}};
    const BriberyInstance lo =
        build_instance(e, RuleSpec::veto(), 2, prices, 1, Variant::dollar_nonuniform);
    const BriberyInstance hi =
        build_instance(e, RuleSpec::veto(), 2, prices, 2, Variant::dollar_nonuniform);
    CHECK_FALSE(solve_dollar_veto(lo).yes);
    CHECK_FALSE(solve_exact(lo).yes);
    const Solution sol = solve_dollar_veto(hi);
    REQUIRE(sol.yes);
    CHECK(sol.cost == 2);
    require_valid_yes(hi, sol);
    CHECK(solve_exact(hi).cost == 2);
  }
  SECTION("random agreement with the oracle") {
    Rng rng(61);
    int done = 0;
    for (int it = 0; done < 220; ++it) {
      Election e = random_election(rng, 3 + rng.below(2), 2 + rng.below(4), 1);
      const int target = rng.below(e.num_candidates());
      for (Vote& v : e.votes)
        v.price = rng.below(5) == 0 ? Price::infinite() : Price::finite(rng.below(4));
      const BriberyInstance inst{std::move(e), RuleSpec::veto(), target,
                                 static_cast<long long>(rng.below(5)),
                                 Variant::dollar_nonuniform};
      check_instance(inst);
      const Solution fast = solve_dollar_veto(inst);
      const Solution exact = solve_exact(inst);
      CAPTURE(it);
      REQUIRE(fast.yes == exact.yes);
      if (fast.yes) {
        REQUIRE(fast.cost == exact.cost);
        require_valid_yes(inst, fast);
      }
      ++done;
    }
  }
}

TEST_CASE("solve_dollar_budgeted frees zero-priced votes plus affordable subsets") {
  SECTION("budget zero needs free changes or nothing") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 1, 2}, 1}, {{0, 1, 2}, 1}, {{1, 2, 0}, 1}});
    const BriberyInstance inst = build_instance(
        e, RuleSpec::plurality(), 2, {{2, Price::finite(2)}}, 0, Variant::dollar_nonuniform);
    CHECK_FALSE(solve_dollar_budgeted(inst).yes);
  }
  SECTION("one pivotal price-1 vote under k-approval") {
    // approvals (k=2): a 2, p 1, b 1, c 0; flipping the b>c vote to approve p
    // lifts p to 2, tied with a, p preferred
    const Election e = make_election(
        {"p", "a", "b", "c"},
        {{{1, 0, 2, 3}, 1}, {{1, 2, 0, 3}, 1}, {{2, 3, 0, 1}, 1}});
    const BriberyInstance inst = build_instance(
        e, RuleSpec::k_approval(2), 0, {{2, Price::finite(1)}}, 1, Variant::dollar_nonuniform);
    const Solution sol = solve_dollar_budgeted(inst);
    REQUIRE(sol.yes);
    CHECK(sol.cost == 1);
    require_valid_yes(inst, sol);
    CHECK(solve_exact(inst).yes);
  }
  SECTION("unaffordable prices mean no") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 1, 0}, 1}});
    const BriberyInstance inst = build_instance(
        e, RuleSpec::plurality(), 2, {{1, Price::finite(2)}, {2, Price::finite(2)}}, 1,
        Variant::dollar_nonuniform);
    CHECK(solve_dollar_budgeted(inst).yes == solve_exact(inst).yes);
  }
  SECTION("budgets over the cap are rejected") {
    const Election e = make_election({"a", "p"}, {{{0, 1}, 1}, {{1, 0}, 1}});
    const BriberyInstance inst = build_instance(e, RuleSpec::plurality(), 1,
                                                {{1, Price::finite(1)}}, 9,
                                                Variant::dollar_nonuniform);
    CHECK_THROWS_AS(solve_dollar_budgeted(inst), Error);
  }
  SECTION("random agreement across rules and budgets") {
    Rng rng(67);
    const std::vector<RuleSpec> rules = {RuleSpec::plurality(), RuleSpec::k_approval(2),
                                         RuleSpec::bucklin(), RuleSpec::runoff()};
    for (int it = 0; it < 150; ++it) {
      Election e = random_election(rng, 3 + rng.below(2), 2 + rng.below(4), 1);
      const int target = rng.below(e.num_candidates());
      for (Vote& v : e.votes)
        v.price = rng.below(6) == 0 ? Price::infinite() : Price::finite(rng.below(3));
      const BriberyInstance inst{std::move(e), rules[it % rules.size()], target,
                                 static_cast<long long>(rng.below(3)),
                                 Variant::dollar_nonuniform};
      check_instance(inst);
      const Solution fast = solve_dollar_budgeted(inst);
      const Solution exact = solve_exact(inst);
      CAPTURE(it, rule_kind_name(inst.rule.kind));
      REQUIRE(fast.yes == exact.yes);
      if (fast.yes) require_valid_yes(inst, fast);
    }
  }
}

TEST_CASE("weighted frugal plurality retops vulnerable votes") {
  SECTION("weight three beats two") {
    const Election e = make_election({"a", "b", "p"},
                                     {{{0, 1, 2}, 2}, {{1, 2, 0}, 2}, {{2, 0, 1}, 1}},
                                     {0, 1, 2});
    const BriberyInstance inst{e, RuleSpec::plurality(), 2, std::nullopt, Variant::frugal};
    const Solution sol = solve_weighted_plurality_frugal(inst);
    REQUIRE(sol.yes);
    require_valid_yes(inst, sol);
  }
  SECTION("no vulnerable weight means the status quo decides") {
    const Election e = make_election({"a", "p"}, {{{0, 1}, 3}, {{1, 0}, 2}});
    const BriberyInstance inst{e, RuleSpec::plurality(), 1, std::nullopt, Variant::frugal};
    CHECK_FALSE(solve_weighted_plurality_frugal(inst).yes);
  }
  SECTION("exhaustive small agreement with the oracle") {
    Rng rng(71);
    for (int it = 0; it < 200; ++it) {
      const Election e = random_election(rng, 3, 1 + rng.below(3), 4);
      const int target = rng.below(3);
      const BriberyInstance inst{e, RuleSpec::plurality(), target, std::nullopt, Variant::frugal};
      const Solution fast = solve_weighted_plurality_frugal(inst);
      const Solution exact = solve_exact(inst);
      CAPTURE(it);
      REQUIRE(fast.yes == exact.yes);
    }
  }
}

TEST_CASE("weighted three-candidate maximin and copeland") {
  SECTION("zero vulnerable weight") {
    const Election e = make_election({"a", "b", "p"}, {{{0, 1, 2}, 2}});
    const BriberyInstance inst{e, RuleSpec::maximin(), 2, std::nullopt, Variant::frugal};
    CHECK_FALSE(solve_weighted_threecand(inst).yes);
  }
  SECTION("spec oracle-equivalence instance") {
    const Election e = make_election(
        {"p", "a", "b"},
        {{{1, 2, 0}, 2}, {{2, 1, 0}, 2}, {{0, 1, 2}, 1}, {{0, 2, 1}, 1}},
        {0, 1, 2});
    const BriberyInstance inst{e, RuleSpec::maximin(), 0, std::nullopt, Variant::frugal};
    CHECK(solve_weighted_threecand(inst).yes == solve_exact(inst).yes);
  }
  SECTION("arity is enforced") {
    Rng rng(3);
    const Election e = random_election(rng, 4, 2, 1);
    const BriberyInstance inst{e, RuleSpec::maximin(), 0, std::nullopt, Variant::frugal};
    CHECK_THROWS_AS(solve_weighted_threecand(inst), Error);
  }
  SECTION("random agreement with the oracle") {
    Rng rng(73);
    for (int it = 0; it < 200; ++it) {
      const Election e = random_election(rng, 3, 1 + rng.below(4), 3);
      const int target = rng.below(3);
      const RuleSpec rule = it % 2 ? RuleSpec::maximin() : RuleSpec::copeland(1, 2);
      const BriberyInstance inst{e, rule, target, std::nullopt, Variant::frugal};
      const Solution fast = solve_weighted_threecand(inst);
      const Solution exact = solve_exact(inst);
      CAPTURE(it, rule_kind_name(rule.kind));
      REQUIRE(fast.yes == exact.yes);
      if (fast.yes) require_valid_yes(inst, fast);
    }
  }
}

TEST_CASE("budget monotonicity") {
  Rng rng(79);
  for (int it = 0; it < 150; ++it) {
    BriberyInstance inst = random_dollar_instance(rng, 3, 2 + rng.below(3), false);
    const Solution lo = solve_exact(inst);
    BriberyInstance more = inst;
    more.budget = *inst.budget + 1 + rng.below(2);
    const Solution hi = solve_exact(more);
    if (lo.yes) REQUIRE(hi.yes);
  }
}

TEST_CASE("frugal equals the zero-price zero-budget dollar embedding") {
  Rng rng(83);
  for (int it = 0; it < 100; ++it) {
    const int m = 2 + rng.below(3);
    Election e = random_election(rng, m, 1 + rng.below(4), 1);
    const int target = rng.below(m);
    const BriberyInstance frugal_inst{e, RuleSpec::borda(), target, std::nullopt, Variant::frugal};
    Election priced = e;
    for (Vote& v : priced.votes) v.price = Price::finite(0);
    const BriberyInstance dollar_inst{std::move(priced), RuleSpec::borda(), target, 0LL,
                                      Variant::dollar_uniform};
    REQUIRE(solve_exact(frugal_inst).yes == solve_exact(dollar_inst).yes);
  }
}

TEST_CASE("pricing an unchanged vulnerable vote infinite keeps a witness valid") {
  Rng rng(89);
  int found = 0;
  for (int it = 0; it < 300 && found < 40; ++it) {
    BriberyInstance inst = random_dollar_instance(rng, 3, 3 + rng.below(3), false);
    const Solution sol = solve_exact(inst);
    if (!sol.yes) continue;
    const auto labels = classify_vulnerable(inst.election, inst.rule, inst.target);
    std::vector<char> changed(inst.election.num_votes(), 0);
    for (const auto& [idx, r] : sol.changes) changed[idx] = 1;
    int untouched = -1;
    for (int i = 0; i < inst.election.num_votes(); ++i)
      if (labels[i] == VoteLabel::vulnerable && !changed[i]) untouched = i;
    if (untouched < 0) continue;
    BriberyInstance repriced = inst;
    repriced.election.votes[untouched].price = Price::infinite();
    REQUIRE(check_solution(repriced, sol).empty());
    ++found;
  }
  REQUIRE(found > 0);
}

namespace {

// Independent ground truth built on a different enumeration shape: every
// vulnerable vote simultaneously ranges over all rankings (originals
// included), with the price of actually-changed votes checked against the
// budget at the leaves.
bool direct_enumeration_decides(const BriberyInstance& inst) {
  const Election& e = inst.election;
  const int m = e.num_candidates();
  if (compute_winner(e, inst.rule) == inst.target) return true;
  const std::vector<int> vul =
      vulnerable_indices(classify_vulnerable(e, inst.rule, inst.target));
  const std::vector<Ranking> all = detail::all_rankings(m);
  Election scratch = e;
  const auto rec = [&](auto&& self, size_t at) -> bool {
    if (at == vul.size()) {
      long long cost = 0;
      for (int i : vul) {
        if (scratch.votes[i].ranking == e.votes[i].ranking) continue;
        if (!e.votes[i].price.is_finite()) return false;
        cost += e.votes[i].price.amount();
      }
      if (is_dollar(inst.variant) && cost > *inst.budget) return false;
      return compute_winner(scratch, inst.rule) == inst.target;
    }
    for (const Ranking& r : all) {
      scratch.votes[vul[at]].ranking = r;
      if (self(self, at + 1)) return true;
    }
    scratch.votes[vul[at]].ranking = e.votes[vul[at]].ranking;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("solve_exact agrees with a direct assignment enumeration") {
  Rng rng(113);
  const std::vector<RuleSpec> rules = {RuleSpec::plurality(), RuleSpec::borda(),
                                       RuleSpec::maximin(),   RuleSpec::bucklin(),
                                       RuleSpec::runoff(),    RuleSpec::stv()};
  for (int it = 0; it < 120; ++it) {
    const int m = 2 + rng.below(2);
    Election e = random_election(rng, m, 1 + rng.below(3), 2);
    const int target = rng.below(m);
    const RuleSpec rule = rules[it % rules.size()];
    if (it % 2 == 0) {
      const BriberyInstance inst{e, rule, target, std::nullopt, Variant::frugal};
      CAPTURE(it, rule_kind_name(rule.kind));
      REQUIRE(solve_exact(inst).yes == direct_enumeration_decides(inst));
    } else {
      for (Vote& v : e.votes)
        v.price = rng.below(6) == 0 ? Price::infinite() : Price::finite(rng.below(3));
      const BriberyInstance inst{std::move(e), rule, target,
                                 static_cast<long long>(rng.below(4)),
                                 Variant::dollar_nonuniform};
      check_instance(inst);
      CAPTURE(it, rule_kind_name(rule.kind));
      REQUIRE(solve_exact(inst).yes == direct_enumeration_decides(inst));
    }
  }
}
