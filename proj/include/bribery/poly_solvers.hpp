#pragma once

#include "bribery/election.hpp"

// The five polynomial-time optimal bribery solvers:
//   adding approvals under VI and CI witnesses,
//   deleting approvals under a VI witness,
//   swapping approvals to the preferred candidate under CI and VI witnesses.
// Each throws input_error when the instance's mode or witness does not
// match, and otherwise returns the optimal cost (with a verifying plan
// when it fits the budget).

namespace bribery {

SolveOutcome solve_add_vi(const BriberyInstance& instance);
SolveOutcome solve_add_ci(const BriberyInstance& instance);
SolveOutcome solve_del_vi(const BriberyInstance& instance);
SolveOutcome solve_swap_to_p_ci(const BriberyInstance& instance);
SolveOutcome solve_swap_to_p_vi(const BriberyInstance& instance);

namespace detail {

// Internals of the Add-CI dynamic program, exposed so tests can cross-check
// the bottom-up table against a naive memoized recursion.

struct AddCiSide {
    std::vector<int> chain;  // candidates outward from p on this side
    // per level i (1-based, chain[i-1]): extension totals of the voters in
    // bucket V(i), sorted ascending; unpayable extensions are dropped
    std::vector<std::vector<Money>> bucket_costs;
    std::vector<std::vector<int>> bucket_voters;  // voters, aligned with bucket_costs
    std::vector<int> chain_scores;                // initial scores of chain[i-1]
};

// cost(i, e): sum of the e cheapest extension totals in bucket i.
Cost side_bucket_cost(const AddCiSide& side, int level, int count);

// Bottom-up f(i, e, t) for a fixed other-side total `other_extensions`
// (x_r + x_0 seen from the left, x_l + x_0 from the right).
std::vector<std::vector<std::vector<Cost>>> add_ci_table(const AddCiSide& side, int p_score,
                                                         int other_extensions, int max_extensions,
                                                         int max_exceeders);

}  // namespace detail

}  // namespace bribery
