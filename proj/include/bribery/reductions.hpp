#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "bribery/election.hpp"

// Hardness-reduction gadgets as verifiable instance generators: forward
// plan constructors turn source-problem solutions into briberies, and
// extractors map briberies back to source solutions.

namespace bribery {

// Restricted Exact Cover by 3-Sets: 3n elements, 3n triples, every element
// in exactly three triples; repeated triples are allowed (n = 1 forces them).
struct Rx3cInstance {
    int n = 0;
    std::vector<std::array<int, 3>> sets;  // sorted element ids in [0, 3n)

    void check_valid() const;
};

struct CubicGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // a < b, no duplicates

    void check_valid() const;  // simple and 3-regular
};

// A generated hard instance plus per-index gadget roles (strings such as
// "set:2", "solution:1:4", "vertex:0", "chain:7") and printable names.
struct ReductionBundle {
    BriberyInstance instance;
    std::vector<std::string> candidate_roles;
    std::vector<std::string> voter_roles;
    std::vector<std::string> candidate_names;
    std::vector<std::string> voter_names;
};

int find_role(const std::vector<std::string>& roles, const std::string& role);
std::vector<int> find_roles_with_prefix(const std::vector<std::string>& roles,
                                        const std::string& prefix);

// RX3C -> priced deletion bribery on a CI axis (committee n+1, budget 9n).
ReductionBundle reduce_rx3c_to_del_ci(const Rx3cInstance& src);
BriberyPlan build_plan_from_cover_del_ci(const ReductionBundle& bundle, const std::vector<int>& cover);
std::vector<int> extract_cover_del_ci(const ReductionBundle& bundle, const BriberyPlan& plan);

// Cubic Independent Set -> unit-price swap bribery on a CI axis.
ReductionBundle reduce_cubic_is_to_swap_ci(const CubicGraph& graph, int h);
BriberyPlan build_plan_from_independent_set(const ReductionBundle& bundle,
                                            const std::vector<int>& vertices);
std::vector<int> extract_is_swap_ci(const ReductionBundle& bundle, const BriberyPlan& plan);

// RX3C -> priced swap bribery on a VI order (single winner, budget 2n).
ReductionBundle reduce_rx3c_to_swap_vi(const Rx3cInstance& src);
BriberyPlan build_plan_from_cover_swap_vi(const ReductionBundle& bundle, const std::vector<int>& cover);

// Seed-deterministic source generators.
Rx3cInstance gen_rx3c(int n, std::uint64_t seed);
CubicGraph gen_cubic_graph(int num_vertices, std::uint64_t seed);
std::pair<Election, DomainWitness> gen_random_election(int num_candidates, int num_voters,
                                                       double density, DomainKind domain,
                                                       std::uint64_t seed);

// Exhaustive source-problem solvers (test oracles).
std::optional<std::vector<int>> solve_rx3c_exhaustive(const Rx3cInstance& src);
std::optional<std::vector<int>> find_independent_set(const CubicGraph& graph, int size);

}  // namespace bribery
