#pragma once

#include <numeric>

#include "bribery/election.hpp"
#include "bribery/reductions.hpp"
#include "bribery/rng.hpp"

// Instance builders shared by the unit and acceptance suites.

namespace bribery::testutil {

inline Election make_election(int num_candidates, std::vector<Ballot> ballots) {
    Election e;
    e.num_candidates = num_candidates;
    for (Ballot& b : ballots) std::sort(b.begin(), b.end());
    e.ballots = std::move(ballots);
    e.check_valid();
    return e;
}

inline std::vector<int> iota_order(int size) {
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

inline BriberyInstance make_instance(Election e, DomainWitness witness, int k, int p, Money budget,
                                     CostModel costs) {
    BriberyInstance inst;
    inst.election = std::move(e);
    inst.witness = std::move(witness);
    inst.committee_size = k;
    inst.preferred = p;
    inst.budget = budget;
    inst.costs = std::move(costs);
    inst.check_valid();
    return inst;
}

// Explicit costs over the whole op space of the mode, drawn from a palette.
inline CostModel random_costs(OperationMode mode, const Election& e, int preferred, Rng& rng,
                              const std::vector<Cost>& palette) {
    CostModel costs;
    costs.mode = mode;
    costs.default_cost = std::nullopt;
    auto draw = [&] { return palette[rng.below(palette.size())]; };
    for (int v = 0; v < e.num_voters(); ++v) {
        const Ballot& b = e.ballots[v];
        switch (mode) {
            case OperationMode::Add:
                for (int c = 0; c < e.num_candidates; ++c)
                    if (!ballot_contains(b, c)) costs.set_add(v, c, draw());
                break;
            case OperationMode::Delete:
                for (int c : b) costs.set_delete(v, c, draw());
                break;
            case OperationMode::SwapToP:
                if (ballot_contains(b, preferred)) break;
                for (int c : b) costs.set_swap(v, c, preferred, draw());
                break;
            case OperationMode::Swap:
                for (int from : b)
                    for (int to = 0; to < e.num_candidates; ++to)
                        if (to != from && !ballot_contains(b, to)) costs.set_swap(v, from, to, draw());
                break;
        }
    }
    return costs;
}

struct SolverSpec {
    const char* name;
    OperationMode mode;
    DomainKind kind;
};

inline const std::vector<SolverSpec>& solver_specs() {
    static const std::vector<SolverSpec> specs = {
        {"add-vi", OperationMode::Add, DomainKind::VoterInterval},
        {"add-ci", OperationMode::Add, DomainKind::CandidateInterval},
        {"del-vi", OperationMode::Delete, DomainKind::VoterInterval},
        {"swap2p-ci", OperationMode::SwapToP, DomainKind::CandidateInterval},
        {"swap2p-vi", OperationMode::SwapToP, DomainKind::VoterInterval},
    };
    return specs;
}

// Random witness-valid instance for one solver.
inline BriberyInstance random_instance(const SolverSpec& spec, int max_m, int max_n, Money max_budget,
                                       const std::vector<Cost>& palette, Rng& rng) {
    int m = rng.range(1, max_m);
    int n = rng.range(1, max_n);
    double density = 0.3 + 0.7 * (rng.below(1000) / 1000.0);
    auto [e, witness] = gen_random_election(m, n, density, spec.kind, rng.next());
    int p = rng.range(0, m - 1);
    int k = rng.range(1, m);
    Money budget = rng.range(0, static_cast<int>(max_budget));
    CostModel costs = random_costs(spec.mode, e, p, rng, palette);
    return make_instance(std::move(e), std::move(witness), k, p, budget, std::move(costs));
}

}  // namespace bribery::testutil
