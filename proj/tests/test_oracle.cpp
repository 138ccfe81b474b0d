#include <doctest.h>

#include "bribery/exact_oracle.hpp"
#include "bribery/poly_solvers.hpp"
#include "bribery/reductions.hpp"
#include "bribery/rng.hpp"
#include "bribery/structure.hpp"
#include "test_util.hpp"

using namespace bribery;
using testutil::iota_order;
using testutil::make_election;
using testutil::make_instance;

TEST_CASE("oracle basics") {
    SUBCASE("p already wins") {
        Election e = make_election(2, {{1}});
        auto inst = make_instance(e, DomainWitness::unrestricted(), 1, 1, 0,
                                  CostModel::unit(OperationMode::Add));
        SolveOutcome out = oracle_solve(inst);
        CHECK(out.feasible);
        CHECK(out.optimal_cost == Cost{0});
        CHECK(out.plan->ops.empty());
    }
    SUBCASE("single deletion settles a two-candidate race") {
        Election e = make_election(2, {{0}, {0}, {1}});
        auto inst = make_instance(e, DomainWitness::unrestricted(), 1, 1, 5,
                                  CostModel::unit(OperationMode::Delete));
        SolveOutcome out = oracle_solve(inst);
        CHECK(out.feasible);
        CHECK(out.optimal_cost == Cost{1});
        CHECK(verify_solution(inst, *out.plan).valid());
    }
    SUBCASE("zero-cost operations terminate") {
        Election e = make_election(3, {{0}, {0}, {2}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Swap);
        // a free merry-go-round between 0, 1 and 2 for every voter
        for (int v = 0; v < 3; ++v)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (a != b) costs.set_swap(v, a, b, 0);
        auto inst = make_instance(e, DomainWitness::unrestricted(), 1, 2, 0, costs);
        SolveOutcome out = oracle_solve(inst);
        CHECK(out.feasible);
        CHECK(out.optimal_cost == Cost{0});
        CHECK(verify_solution(inst, *out.plan).valid());
    }
    SUBCASE("the state cap raises a resource error") {
        Election e = make_election(4, {{0}, {0}, {1}, {2}});
        auto inst = make_instance(e, DomainWitness::unrestricted(), 1, 3, 4,
                                  CostModel::unit(OperationMode::Swap));
        OracleOptions opt;
        opt.max_states = 5;
        CHECK_THROWS_AS(oracle_solve(inst, opt), resource_error);
    }
}

TEST_CASE("removing forbidden entries never raises the optimum") {
    Rng rng(808);
    const std::vector<Cost> palette = {Cost{0}, Cost{1}, Cost{2}, std::nullopt};
    for (int round = 0; round < 120; ++round) {
        for (const auto& spec : testutil::solver_specs()) {
            BriberyInstance inst = testutil::random_instance(spec, 4, 4, 3, palette, rng);
            BriberyInstance relaxed = inst;
            for (auto& [key, cost] : relaxed.costs.table)
                if (!cost) cost = 1;
            SolveOutcome tight = oracle_solve(inst);
            SolveOutcome loose = oracle_solve(relaxed);
            if (tight.feasible) {
                REQUIRE(loose.feasible);
                CHECK(*loose.optimal_cost <= *tight.optimal_cost);
            }
        }
    }
}

TEST_CASE("bb_solve_deletions") {
    SUBCASE("no superior candidates") {
        Election e = make_election(2, {{1}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 0,
                                  CostModel::unit(OperationMode::Delete));
        SolveOutcome out = bb_solve_deletions(inst);
        CHECK(out.feasible);
        CHECK(out.optimal_cost == Cost{0});
    }
    SUBCASE("agrees with the VI front/back computation") {
        Election e = make_election(2, {{0}, {0, 1}, {0}, {0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Delete);
        costs.set_delete(0, 0, 1);
        costs.set_delete(1, 0, 5);
        costs.set_delete(2, 0, 2);
        costs.set_delete(3, 0, 1);
        costs.set_delete(1, 1, 0);
        auto inst = make_instance(e, DomainWitness::vi(iota_order(4)), 1, 1, 9, costs);
        SolveOutcome out = bb_solve_deletions(inst);
        CHECK(out.optimal_cost == Cost{4});
        CHECK(verify_solution(inst, *out.plan).valid());
    }
    SUBCASE("mode mismatch is refused") {
        Election e = make_election(2, {{0}});
        auto inst = make_instance(e, DomainWitness::unrestricted(), 1, 1, 0,
                                  CostModel::unit(OperationMode::Add));
        CHECK_THROWS_AS(bb_solve_deletions(inst), input_error);
    }
    SUBCASE("agrees with the oracle on random delete instances") {
        Rng rng(909);
        const std::vector<Cost> palette = {Cost{0}, Cost{1}, Cost{2}, std::nullopt};
        for (int round = 0; round < 200; ++round) {
            DomainKind kind = round % 3 == 0 ? DomainKind::CandidateInterval
                              : round % 3 == 1 ? DomainKind::VoterInterval
                                               : DomainKind::Unrestricted;
            testutil::SolverSpec spec{"del", OperationMode::Delete, kind};
            BriberyInstance inst = testutil::random_instance(spec, 4, 4, 4, palette, rng);
            SolveOutcome search = oracle_solve(inst);
            SolveOutcome bb = bb_solve_deletions(inst);
            CHECK(search.feasible == bb.feasible);
            if (search.feasible) CHECK(*search.optimal_cost == *bb.optimal_cost);
            if (bb.feasible) CHECK(verify_solution(inst, *bb.plan).valid());
        }
    }
}

TEST_CASE("structure-aware unit swap search") {
    SUBCASE("refuses priced instances") {
        Election e = make_election(2, {{0}});
        CostModel costs = CostModel::forbidden_by_default(OperationMode::Swap);
        auto inst = make_instance(e, DomainWitness::ci(iota_order(2)), 1, 1, 1, costs);
        CHECK_THROWS_AS(solve_swap_ci_unit(inst), input_error);
    }
    SUBCASE("refuses instances whose facts fail") {
        // a singleton ballot away from p could teleport onto p
        Election e = make_election(3, {{0}, {0}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(3)), 1, 2, 1,
                                  CostModel::unit(OperationMode::Swap));
        CHECK_THROWS_AS(solve_swap_ci_unit(inst), input_error);
    }
    SUBCASE("matches the oracle on a hand-built shifting instance") {
        // axis 0..5 with p = 5; every ballot endpoint outscores p, all
        // ballots sit two shifts away from p
        Election e = make_election(6, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}, {0, 1, 2, 3},
                                       {5}, {5}});
        auto inst = make_instance(e, DomainWitness::ci(iota_order(6)), 4, 5, 1,
                                  CostModel::unit(OperationMode::Swap));
        SolveOutcome mine = solve_swap_ci_unit(inst);
        SolveOutcome truth = oracle_solve(inst);
        CHECK(mine.feasible);
        CHECK(mine.optimal_cost == Cost{1});
        CHECK(truth.optimal_cost == Cost{1});
        CHECK(verify_solution(inst, *mine.plan).valid());

        BriberyInstance broke = inst;
        broke.budget = 0;
        CHECK_FALSE(solve_swap_ci_unit(broke).feasible);
        CHECK_FALSE(oracle_solve(broke).feasible);
    }
    SUBCASE("matches the oracle on random far-window instances") {
        Rng rng(1313);
        int compared = 0;
        for (int round = 0; round < 400; ++round) {
            int m = rng.range(6, 8);
            int n = rng.range(3, 8);
            Money budget = rng.range(1, 2);
            Election e;
            e.num_candidates = m;
            for (int v = 0; v < n; ++v) {
                if (rng.chance(0.25)) {
                    e.ballots.push_back({m - 1});  // p holder
                    continue;
                }
                int hi_limit = m - 4;
                int a = rng.range(0, hi_limit - 1);
                int b = rng.range(a + 1, hi_limit);
                Ballot ballot;
                for (int c = a; c <= b; ++c) ballot.push_back(c);
                e.ballots.push_back(ballot);
            }
            BriberyInstance inst = make_instance(e, DomainWitness::ci(iota_order(m)),
                                                 rng.range(1, m), m - 1, budget,
                                                 CostModel::unit(OperationMode::Swap));
            SolveOutcome mine;
            try {
                mine = solve_swap_ci_unit(inst);
            } catch (const input_error&) {
                continue;  // structural facts do not hold for this draw
            }
            SolveOutcome truth = oracle_solve(inst);
            ++compared;
            CHECK(mine.feasible == truth.feasible);
            if (mine.feasible) {
                CHECK(*mine.optimal_cost == *truth.optimal_cost);
                CHECK(verify_solution(inst, *mine.plan).valid());
            }
        }
        CHECK(compared >= 50);
    }
}

TEST_CASE("bb node cap raises a resource error") {
    Rx3cInstance src = gen_rx3c(1, 4);
    ReductionBundle bundle = reduce_rx3c_to_del_ci(src);
    BbOptions opt;
    opt.max_nodes = 10;
    CHECK_THROWS_AS(bb_solve_deletions(bundle.instance, opt), resource_error);
}
