#pragma once

#include "bribery/election.hpp"

// Exact solvers for arbitrary (including NP-hard) bribery variants at desk
// scale; the ground truth for all property tests.

namespace bribery {

struct OracleOptions {
    // Visited-state cap; exceeding it raises resource_error rather than
    // returning a wrong answer. Overridable via BRIBERY_MAX_STATES.
    long long max_states = 10'000'000;
};

// Least-cost search over ballot profiles. Successors are applicable,
// non-forbidden unit operations of the instance's mode; goal states are
// witness-valid elections where p joins a winning committee. For Add and
// Delete modes intermediate profiles are also kept witness-valid (any
// final-valid plan reorders into such a sequence); for Swap modes only the
// goal is filtered, since some valid plans have no witness-valid unit-op
// ordering. Search stops at the budget, so an infeasible outcome carries
// no optimal_cost.
SolveOutcome oracle_solve(const BriberyInstance& instance, const OracleOptions& options = {});

// Reads BRIBERY_MAX_STATES, falling back to the default cap.
OracleOptions oracle_options_from_env();

struct BbOptions {
    long long max_nodes = 50'000'000;
};

// Exact optimal deletion bribery. Under a CI witness each final ballot is a
// sub-interval of the original and voters are independent, so the search
// enumerates Pareto-optimal per-voter trims depth-first with
// branch-and-bound pruning. Under VI / no witness, deletions decompose per
// candidate and the optimum is computed directly. Reports the true optimum
// even when it exceeds the budget.
SolveOutcome bb_solve_deletions(const BriberyInstance& instance, const BbOptions& options = {});

// Exhaustive search for unit-price Swap bribery under a CI witness, used to
// settle gadget instances whose raw profile space is out of reach. Verifies
// the structural facts it relies on (p's score cannot change within the
// budget; no voter can, within the budget, remove an approval from any
// candidate scoring at or below p; candidates more than `budget` above p
// stay above p), then enumerates final ballots of exactly the voters able
// to demote a threatened candidate. Throws input_error when the facts do
// not hold for the instance.
SolveOutcome solve_swap_ci_unit(const BriberyInstance& instance);

}  // namespace bribery
