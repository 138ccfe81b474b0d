#include <doctest.h>

#include "bribery/exact_oracle.hpp"
#include "bribery/poly_solvers.hpp"
#include "bribery/rng.hpp"
#include "bribery/structure.hpp"
#include "test_util.hpp"

using namespace bribery;
using testutil::iota_order;
using testutil::make_election;
using testutil::make_instance;

namespace {

// Every solver answer is checked three ways: against the frozen expected
// value, against the exact oracle on the same instance, and (when feasible)
// through the plan verifier.
void check_solved(const BriberyInstance& inst, const SolveOutcome& outcome,
                  std::optional<Money> expected_cost) {
    SolveOutcome reference = oracle_solve(inst);
    CHECK(outcome.feasible == reference.feasible);
    if (expected_cost) {
        REQUIRE(outcome.optimal_cost.has_value());
        CHECK(*outcome.optimal_cost == *expected_cost);
        if (reference.feasible) {
            REQUIRE(reference.optimal_cost.has_value());
            CHECK(*reference.optimal_cost == *expected_cost);
        }
    }
    if (outcome.feasible) {
        REQUIRE(outcome.plan.has_value());
        VerificationReport report = verify_solution(inst, *outcome.plan);
        CHECK(report.valid());
        CHECK(outcome.plan->total_cost == *outcome.optimal_cost);
    }
}

}  // namespace

TEST_CASE("solve_add_vi") {
    SUBCASE("p already wins costs nothing") {
        // a=0, p=1; two voters even
        Election e = make_election(2, {{0}, {1}});
        auto inst = make_instance(e, DomainWitness::vi(iota_order(2)), 1, 1, 0,
                                  CostModel::unit(OperationMode::Add));
        check_solved(inst, solve_add_vi(inst), 0);
    }
    SUBCASE("interval extension picks the bridging voter") {
        // order v0 v1 v2; a=0 approved by v0,v1; p=1 by v2; k=1, unit prices
        Election e = make_election(2, {{0}, {0}, {1}});
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 2,
                                  CostModel::unit(OperationMode::Add));
        SolveOutcome out = solve_add_vi(inst);
        check_solved(inst, out, 1);
        REQUIRE(out.plan.has_value());
        CHECK(out.plan->ops == std::vector<UnitOperation>{UnitOperation::add(1, 1)});
    }
    SUBCASE("a cheap far voter cannot break the interval") {
        // p approved only by v0; extending to v2 alone would leave a hole
        Election e = make_election(2, {{1}, {0}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Add);
        costs.set_add(1, 1, 5);
        costs.set_add(2, 1, 1);
        costs.set_add(0, 0, 1);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 5, costs);
        check_solved(inst, solve_add_vi(inst), 5);
    }
    SUBCASE("empty p column tries every placement") {
        Election e = make_election(2, {{0}, {0}, {}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Add);
        costs.set_add(0, 1, 4);
        costs.set_add(1, 1, 3);
        costs.set_add(2, 1, 2);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 9, costs);
        // needs two contiguous approvals; v1+v2 = 5 beats v0+v1 = 7
        check_solved(inst, solve_add_vi(inst), 5);
    }
    SUBCASE("wrong witness is refused") {
        Election e = make_election(2, {{0}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 0,
                                  CostModel::unit(OperationMode::Add));
        CHECK_THROWS_AS(solve_add_vi(inst), input_error);
    }
}

TEST_CASE("solve_add_ci") {
    SUBCASE("p already wins") {
        Election e = make_election(2, {{1}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 0,
                                  CostModel::unit(OperationMode::Add));
        check_solved(inst, solve_add_ci(inst), 0);
    }
    SUBCASE("two sides extended to tie the leader") {
        // axis l1 p r1: l1=0, p=1, r1=2; ballots {l1}, {r1}, {r1}; k=1
        Election e = make_election(3, {{0}, {2}, {2}});
        CostModel costs = CostModel::unit(OperationMode::Add);
        costs.set_add(0, 1, 1);
        costs.set_add(1, 1, 1);
        costs.set_add(2, 1, 3);
        auto inst = make_instance(e, DomainWitness::ci(iota_order(3)), 1, 1, 4, costs);
        check_solved(inst, solve_add_ci(inst), 2);
    }
    SUBCASE("interior candidates must be paid for") {
        // axis l2 l1 p: l2=0, l1=1, p=2; extending v0 pays for l1 too
        Election e = make_election(3, {{0}, {0}, {2}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Add);
        costs.set_add(0, 1, 2);
        costs.set_add(0, 2, 1);
        costs.set_add(1, 1, 0);
        costs.set_add(1, 2, 5);
        auto inst = make_instance(e, DomainWitness::ci(iota_order(3)), 1, 2, 6, costs);
        check_solved(inst, solve_add_ci(inst), 3);
    }
    SUBCASE("empty ballots fold into the guess as a p-only pool") {
        // axis a p: ballots {a}, {a}, {}, {}; k=1
        Election e = make_election(2, {{0}, {0}, {}, {}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Add);
        costs.set_add(2, 1, 1);
        costs.set_add(3, 1, 4);
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 9, costs);
        // p needs two approvals to tie a; both must come from the empty pool
        check_solved(inst, solve_add_ci(inst), 5);
    }
    SUBCASE("bottom-up table equals naive recursion") {
        Rng rng(91);
        for (int round = 0; round < 120; ++round) {
            auto spec = testutil::solver_specs()[1];  // add-ci
            BriberyInstance inst =
                testutil::random_instance(spec, 5, 5, 4, {Cost{0}, Cost{1}, Cost{2}, std::nullopt}, rng);
            // rebuild one side exactly as the solver sees it
            std::vector<int> pos = inverse_permutation(inst.witness.order, inst.election.num_candidates);
            std::vector<int> scores = approval_scores(inst.election);
            detail::AddCiSide side;
            {
                // left chain of p
                for (int q = pos[inst.preferred] - 1; q >= 0; --q)
                    side.chain.push_back(inst.witness.order[q]);
                for (int c : side.chain) side.chain_scores.push_back(scores[c]);
                side.bucket_costs.assign(side.chain.size(), {});
                side.bucket_voters.assign(side.chain.size(), {});
                for (int v = 0; v < inst.election.num_voters(); ++v) {
                    const Ballot& b = inst.election.ballots[v];
                    if (b.empty() || ballot_contains(b, inst.preferred)) continue;
                    int innermost = -1;
                    bool left = true;
                    for (int c : b) {
                        if (pos[c] > pos[inst.preferred]) left = false;
                        if (innermost == -1 || pos[c] > pos[innermost]) innermost = c;
                    }
                    if (!left) continue;
                    int level = pos[inst.preferred] - pos[innermost];
                    Cost ext = 0;
                    for (int q = pos[innermost] + 1; q < pos[inst.preferred]; ++q)
                        ext = cost_sum(ext, inst.costs.add_cost(v, inst.witness.order[q]));
                    ext = cost_sum(ext, inst.costs.add_cost(v, inst.preferred));
                    if (!ext) continue;
                    side.bucket_costs[level - 1].push_back(*ext);
                    side.bucket_voters[level - 1].push_back(v);
                }
                for (auto& bucket : side.bucket_costs) std::sort(bucket.begin(), bucket.end());
            }
            int pool = 0;
            for (const auto& bucket : side.bucket_costs) pool += static_cast<int>(bucket.size());
            int w = rng.range(0, 3);
            int tmax = rng.range(0, 3);
            auto table = detail::add_ci_table(side, scores[inst.preferred], w, pool, tmax);

            // memoized recursion straight off the recurrence
            auto naive = [&](auto&& self, int i, int e, int t) -> Cost {
                if (t < 0) return std::nullopt;
                if (i == 0) return e == 0 ? Cost{0} : std::nullopt;
                int chi = side.chain_scores[i - 1] > scores[inst.preferred] + e + w ? 1 : 0;
                Cost best = std::nullopt;
                for (int take = 0; take <= e; ++take) {
                    Cost c = cost_sum(detail::side_bucket_cost(side, i, take),
                                      self(self, i - 1, e - take, t - chi));
                    if (c && (!best || *c < *best)) best = c;
                }
                return best;
            };
            for (int e = 0; e <= pool; ++e)
                for (int t = 0; t <= tmax; ++t)
                    CHECK(table[side.chain.size()][e][t] == naive(naive, side.chain.size(), e, t));
        }
    }
}

TEST_CASE("solve_del_vi") {
    SUBCASE("few superiors cost nothing") {
        Election e = make_election(2, {{0}, {1}});
        auto inst = make_instance(e, DomainWitness::vi(iota_order(2)), 2, 1, 0,
                                  CostModel::unit(OperationMode::Delete));
        check_solved(inst, solve_del_vi(inst), 0);
    }
    SUBCASE("front/back split of the interval") {
        // c=0 approved by everyone, p=1 by v1 only; k=1
        Election e = make_election(2, {{0}, {0, 1}, {0}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Delete);
        costs.set_delete(0, 0, 1);
        costs.set_delete(1, 0, 5);
        costs.set_delete(2, 0, 2);
        costs.set_delete(3, 0, 1);
        costs.set_delete(1, 1, 0);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(4)), 1, 1, 9, costs);
        SolveOutcome out = solve_del_vi(inst);
        check_solved(inst, out, 4);  // delete v0, then v2+v3 from the back
    }
    SUBCASE("with k = 2 only the cheaper superior is drained") {
        // a=0 by v0..v2, b=1 by v1..v3, p=2 by v1; k=2
        Election e = make_election(3, {{0}, {0, 1, 2}, {0, 1}, {1}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Delete);
        costs.set_delete(0, 0, 0);
        costs.set_delete(1, 0, 9);
        costs.set_delete(2, 0, 1);
        costs.set_delete(1, 1, 1);
        costs.set_delete(2, 1, 1);
        costs.set_delete(3, 1, 1);
        costs.set_delete(1, 2, 0);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(4)), 2, 2, 9, costs);
        check_solved(inst, solve_del_vi(inst), 1);
    }
}

TEST_CASE("solve_swap_to_p_ci") {
    SUBCASE("p already wins") {
        Election e = make_election(2, {{1}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 0,
                                  CostModel::unit(OperationMode::SwapToP));
        check_solved(inst, solve_swap_to_p_ci(inst), 0);
    }
    SUBCASE("adjacent donors feed p") {
        // axis l1 p r1 r2 (ids 0..3); ballots {l1}, {r1,r2}, {r1}; k=1
        Election e = make_election(4, {{0}, {2, 3}, {2}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::SwapToP);
        costs.set_swap(0, 0, 1, 1);
        costs.set_swap(1, 3, 1, 2);
        costs.set_swap(2, 2, 1, 1);
        auto inst = make_instance(e, DomainWitness::ci(iota_order(4)), 1, 1, 3, costs);
        check_solved(inst, solve_swap_to_p_ci(inst), 1);
    }
    SUBCASE("non-adjacent interval contributes nothing") {
        // ballot {r2, r3} sits away from p; no eligible move exists
        Election e = make_election(4, {{2, 3}, {2, 3}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(4)), 1, 0, 10,
                                  CostModel::unit(OperationMode::SwapToP));
        SolveOutcome out = solve_swap_to_p_ci(inst);
        CHECK_FALSE(out.feasible);
        CHECK_FALSE(out.optimal_cost.has_value());
        check_solved(inst, out, std::nullopt);
    }
    SUBCASE("a non-adjacent singleton may teleport to p") {
        // axis l2 l1 p; both voters hold {l2}; p can still win at k=1
        Election e = make_election(3, {{0}, {0}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(3)), 1, 2, 3,
                                  CostModel::unit(OperationMode::SwapToP));
        check_solved(inst, solve_swap_to_p_ci(inst), 1);
    }
}

TEST_CASE("solve_swap_to_p_vi") {
    SUBCASE("p already wins") {
        Election e = make_election(2, {{1}});
        auto inst = make_instance(e, DomainWitness::vi(iota_order(1)), 1, 1, 0,
                                  CostModel::unit(OperationMode::SwapToP));
        check_solved(inst, solve_swap_to_p_vi(inst), 0);
    }
    SUBCASE("interval grows toward the cheap donor") {
        // order v0 v1 v2; p=1 by v1; c=0 by all; k=1
        Election e = make_election(2, {{0}, {0, 1}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::SwapToP);
        costs.set_swap(0, 0, 1, 1);
        costs.set_swap(2, 0, 1, 2);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 3, costs);
        check_solved(inst, solve_swap_to_p_vi(inst), 1);
    }
    SUBCASE("zero budget and a losing p is infeasible") {
        Election e = make_election(2, {{0}, {0, 1}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::SwapToP);
        costs.set_swap(0, 0, 1, 1);
        costs.set_swap(2, 0, 1, 2);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 0, costs);
        SolveOutcome out = solve_swap_to_p_vi(inst);
        CHECK_FALSE(out.feasible);
        CHECK(out.optimal_cost == Cost{1});  // optimum exists, beyond the budget
    }
    SUBCASE("empty p column branches over first swaps") {
        Election e = make_election(2, {{0}, {0}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::SwapToP);
        costs.set_swap(0, 0, 1, 2);
        costs.set_swap(1, 0, 1, 1);
        costs.set_swap(2, 0, 1, 2);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(3)), 1, 1, 5, costs);
        // the rival holds three approvals, so p needs two adjacent donors
        check_solved(inst, solve_swap_to_p_vi(inst), 3);
    }
}

TEST_CASE("solver plans only touch their mode") {
    Rng rng(404);
    const std::vector<Cost> palette = {Cost{0}, Cost{1}, Cost{2}, std::nullopt};
    for (int round = 0; round < 150; ++round) {
        for (const auto& spec : testutil::solver_specs()) {
            BriberyInstance inst = testutil::random_instance(spec, 5, 5, 4, palette, rng);
            SolveOutcome out;
            if (std::string(spec.name) == "add-vi") out = solve_add_vi(inst);
            else if (std::string(spec.name) == "add-ci") out = solve_add_ci(inst);
            else if (std::string(spec.name) == "del-vi") out = solve_del_vi(inst);
            else if (std::string(spec.name) == "swap2p-ci") out = solve_swap_to_p_ci(inst);
            else out = solve_swap_to_p_vi(inst);
            if (!out.feasible) continue;
            for (const UnitOperation& op : out.plan->ops) {
                CHECK(op_kind_matches_mode(op.kind, spec.mode));
                if (spec.mode == OperationMode::SwapToP) CHECK(op.to == inst.preferred);
            }
            CHECK(verify_solution(inst, *out.plan).valid());
        }
    }
}
