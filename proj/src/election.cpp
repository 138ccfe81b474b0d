#include "bribery/election.hpp"

#include <algorithm>
#include <sstream>

#include "bribery/structure.hpp"

namespace bribery {

bool ballot_contains(const Ballot& b, int candidate) {
    return std::binary_search(b.begin(), b.end(), candidate);
}

void ballot_add(Ballot& b, int candidate) {
    auto it = std::lower_bound(b.begin(), b.end(), candidate);
    if (it != b.end() && *it == candidate)
        throw plan_error("candidate " + std::to_string(candidate) + " already approved");
    b.insert(it, candidate);
}

void ballot_remove(Ballot& b, int candidate) {
    auto it = std::lower_bound(b.begin(), b.end(), candidate);
    if (it == b.end() || *it != candidate)
        throw plan_error("candidate " + std::to_string(candidate) + " not approved");
    b.erase(it);
}

void Election::check_valid() const {
    if (num_candidates < 1) throw input_error("election needs at least one candidate");
    if (ballots.empty()) throw input_error("election needs at least one voter");
    for (int v = 0; v < num_voters(); ++v) {
        const Ballot& b = ballots[v];
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= num_candidates)
                throw input_error("ballot of voter " + std::to_string(v) + " references candidate " +
                                  std::to_string(b[i]) + " out of range");
            if (i > 0 && b[i - 1] >= b[i])
                throw input_error("ballot of voter " + std::to_string(v) + " is not sorted/unique");
        }
    }
}

std::vector<int> inverse_permutation(const std::vector<int>& order, int size) {
    if (static_cast<int>(order.size()) != size)
        throw input_error("order has " + std::to_string(order.size()) + " entries, expected " +
                          std::to_string(size));
    std::vector<int> pos(size, -1);
    for (int i = 0; i < size; ++i) {
        int x = order[i];
        if (x < 0 || x >= size || pos[x] != -1)
            throw input_error("order is not a permutation of 0.." + std::to_string(size - 1));
        pos[x] = i;
    }
    return pos;
}

UnitOperation UnitOperation::swap(int voter, int from, int to) {
    if (from == to) throw input_error("swap with from == to");
    return {OpKind::Swap, voter, -1, from, to};
}

static std::array<int, 4> op_key(const UnitOperation& op) {
    int a = op.kind == OpKind::Swap ? op.from : op.candidate;
    return {op.voter, a, op.to, static_cast<int>(op.kind)};
}

bool operator<(const UnitOperation& a, const UnitOperation& b) { return op_key(a) < op_key(b); }
bool operator==(const UnitOperation& a, const UnitOperation& b) {
    return a.kind == b.kind && a.voter == b.voter && a.candidate == b.candidate && a.from == b.from &&
           a.to == b.to;
}

std::string to_string(const UnitOperation& op) {
    std::ostringstream os;
    switch (op.kind) {
        case OpKind::Add: os << "add(v" << op.voter << ", c" << op.candidate << ")"; break;
        case OpKind::Delete: os << "delete(v" << op.voter << ", c" << op.candidate << ")"; break;
        case OpKind::Swap: os << "swap(v" << op.voter << ", c" << op.from << " -> c" << op.to << ")"; break;
    }
    return os.str();
}

Cost CostModel::add_cost(int voter, int candidate) const {
    auto it = table.find({voter, candidate, -1});
    return it == table.end() ? default_cost : it->second;
}

Cost CostModel::delete_cost(int voter, int candidate) const { return add_cost(voter, candidate); }

Cost CostModel::swap_cost(int voter, int from, int to) const {
    auto it = table.find({voter, from, to});
    return it == table.end() ? default_cost : it->second;
}

bool op_kind_matches_mode(OpKind kind, OperationMode mode) {
    switch (mode) {
        case OperationMode::Add: return kind == OpKind::Add;
        case OperationMode::Delete: return kind == OpKind::Delete;
        case OperationMode::Swap:
        case OperationMode::SwapToP: return kind == OpKind::Swap;
    }
    return false;
}

Cost CostModel::op_cost(const UnitOperation& op) const {
    if (!op_kind_matches_mode(op.kind, mode))
        throw input_error("operation kind does not match cost model mode: " + to_string(op));
    if (op.kind == OpKind::Swap) return swap_cost(op.voter, op.from, op.to);
    return add_cost(op.voter, op.candidate);
}

void BriberyInstance::check_valid() const {
    election.check_valid();
    if (preferred < 0 || preferred >= election.num_candidates)
        throw input_error("preferred candidate out of range");
    if (committee_size < 1 || committee_size > election.num_candidates)
        throw input_error("committee size out of range");
    if (budget < 0) throw input_error("budget must be nonnegative");
    if (costs.default_cost && *costs.default_cost < 0)
        throw input_error("costs must be nonnegative");
    for (const auto& [key, cost] : costs.table)
        if (cost && *cost < 0) throw input_error("costs must be nonnegative");
    if (witness.kind != DomainKind::Unrestricted) {
        int size = witness.kind == DomainKind::CandidateInterval ? election.num_candidates
                                                                 : election.num_voters();
        inverse_permutation(witness.order, size);
    }
}

SolveOutcome SolveOutcome::from_cost(Money cost, BriberyPlan plan, Money budget) {
    SolveOutcome out;
    out.optimal_cost = cost;
    out.feasible = cost <= budget;
    if (out.feasible) out.plan = std::move(plan);
    return out;
}

int approval_score(const Election& e, int candidate) {
    if (candidate < 0 || candidate >= e.num_candidates)
        throw input_error("candidate index out of range");
    int score = 0;
    for (const Ballot& b : e.ballots)
        if (ballot_contains(b, candidate)) ++score;
    return score;
}

std::vector<int> approval_scores(const Election& e) {
    std::vector<int> scores(e.num_candidates, 0);
    for (const Ballot& b : e.ballots)
        for (int c : b) ++scores[c];
    return scores;
}

bool can_join_winning_committee(const Election& e, int committee_size, int preferred) {
    if (preferred < 0 || preferred >= e.num_candidates)
        throw input_error("preferred candidate out of range");
    if (committee_size < 1 || committee_size > e.num_candidates)
        throw input_error("committee size out of range");
    std::vector<int> scores = approval_scores(e);
    int above = 0;
    for (int c = 0; c < e.num_candidates; ++c)
        if (c != preferred && scores[c] > scores[preferred]) ++above;
    return above <= committee_size - 1;
}

Election apply_plan(const Election& e, const BriberyPlan& plan) {
    Election out = e;
    for (size_t i = 0; i < plan.ops.size(); ++i) {
        const UnitOperation& op = plan.ops[i];
        if (op.voter < 0 || op.voter >= out.num_voters())
            throw plan_error("op " + std::to_string(i) + ": voter out of range");
        Ballot& b = out.ballots[op.voter];
        try {
            switch (op.kind) {
                case OpKind::Add:
                    if (op.candidate < 0 || op.candidate >= out.num_candidates)
                        throw plan_error("candidate out of range");
                    ballot_add(b, op.candidate);
                    break;
                case OpKind::Delete:
                    if (op.candidate < 0 || op.candidate >= out.num_candidates)
                        throw plan_error("candidate out of range");
                    ballot_remove(b, op.candidate);
                    break;
                case OpKind::Swap:
                    if (op.from < 0 || op.from >= out.num_candidates || op.to < 0 ||
                        op.to >= out.num_candidates)
                        throw plan_error("candidate out of range");
                    ballot_remove(b, op.from);
                    ballot_add(b, op.to);
                    break;
            }
        } catch (const plan_error& err) {
            throw plan_error("op " + std::to_string(i) + " (" + to_string(op) +
                             ") not applicable: " + err.what());
        }
    }
    return out;
}

Cost plan_cost(const BriberyPlan& plan, const CostModel& costs) {
    Cost total = 0;
    for (const UnitOperation& op : plan.ops) total = cost_sum(total, costs.op_cost(op));
    return total;
}

VerificationReport verify_solution(const BriberyInstance& instance, const BriberyPlan& plan) {
    VerificationReport report;

    // ops applicable: kinds match the mode, SwapToP moves land on p,
    // and the sequence applies cleanly.
    std::optional<Election> after;
    report.ops_applicable = true;
    for (const UnitOperation& op : plan.ops) {
        if (!op_kind_matches_mode(op.kind, instance.costs.mode)) {
            report.ops_applicable = false;
            report.detail = "op kind does not match mode: " + to_string(op);
            break;
        }
        if (instance.costs.mode == OperationMode::SwapToP && op.to != instance.preferred) {
            report.ops_applicable = false;
            report.detail = "swap does not target the preferred candidate: " + to_string(op);
            break;
        }
    }
    if (report.ops_applicable) {
        try {
            after = apply_plan(instance.election, plan);
        } catch (const plan_error& err) {
            report.ops_applicable = false;
            report.detail = err.what();
        }
    }

    // cost within budget (forbidden ops fail this flag rather than erroring)
    try {
        Cost c = plan_cost(plan, instance.costs);
        report.cost_within_budget = c.has_value() && *c <= instance.budget;
        if (!report.cost_within_budget && report.detail.empty())
            report.detail = c ? "plan cost exceeds budget" : "plan contains a forbidden operation";
    } catch (const input_error& err) {
        report.cost_within_budget = false;
        if (report.detail.empty()) report.detail = err.what();
    }

    if (after) {
        report.structure_preserved = witness_holds(*after, instance.witness);
        report.p_wins = can_join_winning_committee(*after, instance.committee_size, instance.preferred);
        if (!report.structure_preserved && report.detail.empty())
            report.detail = "post-election violates the domain witness";
        if (!report.p_wins && report.detail.empty())
            report.detail = "preferred candidate not in any winning committee";
    }
    return report;
}

void canonicalize(BriberyPlan& plan) { std::sort(plan.ops.begin(), plan.ops.end()); }

}  // namespace bribery
