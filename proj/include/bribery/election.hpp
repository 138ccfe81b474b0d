#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for bribery in multiwinner approval elections:
// elections, domain witnesses, unit operations, priced cost models,
// bribery instances, plans, and the plan verifier.

namespace bribery {

using Money = long long;

// Nonnegative integer cost; empty means the operation is forbidden.
using Cost = std::optional<Money>;

inline Cost cost_sum(Cost a, Cost b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct plan_error : std::runtime_error {
    explicit plan_error(const std::string& msg) : std::runtime_error(msg) {}
};
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A ballot is a sorted list of distinct candidate indices.
using Ballot = std::vector<int>;

bool ballot_contains(const Ballot& b, int candidate);
void ballot_add(Ballot& b, int candidate);     // throws plan_error if present
void ballot_remove(Ballot& b, int candidate);  // throws plan_error if absent

struct Election {
    int num_candidates = 0;
    std::vector<Ballot> ballots;  // one per voter

    int num_voters() const { return static_cast<int>(ballots.size()); }
    void check_valid() const;  // m,n >= 1, ballots sorted/deduped/in range
};

enum class DomainKind { Unrestricted, CandidateInterval, VoterInterval };

// Societal axis (CI) or voter order (VI). order[position] = candidate/voter index.
struct DomainWitness {
    DomainKind kind = DomainKind::Unrestricted;
    std::vector<int> order;

    static DomainWitness unrestricted() { return {DomainKind::Unrestricted, {}}; }
    static DomainWitness ci(std::vector<int> axis) { return {DomainKind::CandidateInterval, std::move(axis)}; }
    static DomainWitness vi(std::vector<int> voter_order) { return {DomainKind::VoterInterval, std::move(voter_order)}; }
};

// position_of[index] = position in the order; throws input_error on malformed permutations.
std::vector<int> inverse_permutation(const std::vector<int>& order, int size);

enum class OpKind { Add, Delete, Swap };

struct UnitOperation {
    OpKind kind = OpKind::Add;
    int voter = -1;
    int candidate = -1;  // Add/Delete
    int from = -1, to = -1;  // Swap (from != to)

    static UnitOperation add(int voter, int candidate) { return {OpKind::Add, voter, candidate, -1, -1}; }
    static UnitOperation del(int voter, int candidate) { return {OpKind::Delete, voter, candidate, -1, -1}; }
    static UnitOperation swap(int voter, int from, int to);

    // canonical order: (voter, candidate-or-from, to)
    friend bool operator<(const UnitOperation& a, const UnitOperation& b);
    friend bool operator==(const UnitOperation& a, const UnitOperation& b);
};

std::string to_string(const UnitOperation& op);

enum class OperationMode { Add, Delete, Swap, SwapToP };

// Per-unit-operation prices. Unlisted operations cost default_cost
// (unit-price models: default 1 and an empty table; priced models
// enumerate entries, often with a Forbidden default).
struct CostModel {
    OperationMode mode = OperationMode::Add;
    Cost default_cost = 1;
    std::map<std::array<int, 3>, Cost> table;  // {voter, candidate-or-from, to(-1)}

    void set_add(int voter, int candidate, Cost c) { table[{voter, candidate, -1}] = c; }
    void set_delete(int voter, int candidate, Cost c) { table[{voter, candidate, -1}] = c; }
    void set_swap(int voter, int from, int to, Cost c) { table[{voter, from, to}] = c; }

    Cost add_cost(int voter, int candidate) const;
    Cost delete_cost(int voter, int candidate) const;
    Cost swap_cost(int voter, int from, int to) const;

    // Dispatches on op.kind; throws input_error when the kind does not
    // match the model's mode (SwapToP accepts Swap-kind ops).
    Cost op_cost(const UnitOperation& op) const;

    static CostModel unit(OperationMode mode) { return {mode, 1, {}}; }
    static CostModel forbidden_by_default(OperationMode mode) { return {mode, std::nullopt, {}}; }
};

bool op_kind_matches_mode(OpKind kind, OperationMode mode);

struct BriberyInstance {
    Election election;
    DomainWitness witness;
    int committee_size = 1;  // k
    int preferred = 0;       // p
    Money budget = 0;
    CostModel costs;

    void check_valid() const;  // ranges only; witness validation lives in structure
};

struct BriberyPlan {
    std::vector<UnitOperation> ops;
    Money total_cost = 0;
};

struct SolveOutcome {
    // feasible <=> a valid bribery of cost <= budget exists.
    // optimal_cost is present whenever a valid bribery exists at any cost
    // (so an out-of-budget optimum is reported as infeasible with a cost).
    bool feasible = false;
    std::optional<Money> optimal_cost;
    std::optional<BriberyPlan> plan;

    static SolveOutcome infeasible() { return {}; }
    static SolveOutcome from_cost(Money cost, BriberyPlan plan, Money budget);
};

int approval_score(const Election& e, int candidate);
std::vector<int> approval_scores(const Election& e);

// Nonunique winner model: p joins some winning size-k committee iff
// fewer than k candidates beat p strictly.
bool can_join_winning_committee(const Election& e, int committee_size, int preferred);

// Executes ops in order; throws plan_error (with the op index) on the
// first inapplicable op. The input election is left untouched.
Election apply_plan(const Election& e, const BriberyPlan& plan);

// Sum of per-op costs under the model; empty if any op is forbidden.
// Throws input_error if an op kind does not match the model's mode.
Cost plan_cost(const BriberyPlan& plan, const CostModel& costs);

struct VerificationReport {
    bool ops_applicable = false;     // also false on kind/mode mismatch or (SwapToP) to != p
    bool cost_within_budget = false;
    bool structure_preserved = false;
    bool p_wins = false;
    std::string detail;  // first failure, for diagnostics

    bool valid() const { return ops_applicable && cost_within_budget && structure_preserved && p_wins; }
};

VerificationReport verify_solution(const BriberyInstance& instance, const BriberyPlan& plan);

// Sorts ops into the canonical (voter, candidate, to) order.
void canonicalize(BriberyPlan& plan);

}  // namespace bribery
