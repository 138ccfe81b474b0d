#include "bribery/poly_solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "bribery/structure.hpp"

namespace bribery {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

void check_instance(const BriberyInstance& inst, OperationMode mode, DomainKind kind,
                    const char* solver) {
    inst.check_valid();
    require(inst.costs.mode == mode, std::string(solver) + ": wrong operation mode");
    require(inst.witness.kind == kind, std::string(solver) + ": wrong witness kind");
    require(witness_holds(inst.election, inst.witness),
            std::string(solver) + ": election does not satisfy its witness");
}

// Smallest number of extra approvals that lets p join a winning committee
// (other scores unchanged). Bounded: once p reaches the top score nobody
// sits above.
int minimal_extra_approvals(const std::vector<int>& scores, int committee_size, int preferred) {
    for (int extra = 0;; ++extra) {
        int above = 0;
        for (size_t c = 0; c < scores.size(); ++c)
            if (static_cast<int>(c) != preferred && scores[c] > scores[preferred] + extra) ++above;
        if (above <= committee_size - 1) return extra;
    }
}

bool plan_less(const std::vector<UnitOperation>& a, const std::vector<UnitOperation>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BestPlan {
    std::optional<Money> cost;
    std::vector<UnitOperation> ops;

    // keeps the cheaper plan, lexicographically smallest among ties
    void offer(Money candidate_cost, std::vector<UnitOperation> candidate_ops) {
        std::sort(candidate_ops.begin(), candidate_ops.end());
        if (!cost || candidate_cost < *cost ||
            (candidate_cost == *cost && plan_less(candidate_ops, ops))) {
            cost = candidate_cost;
            ops = std::move(candidate_ops);
        }
    }

    SolveOutcome outcome(Money budget) const {
        if (!cost) return SolveOutcome::infeasible();
        return SolveOutcome::from_cost(*cost, BriberyPlan{ops, *cost}, budget);
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Adding approvals, VI witness: only p gains approvals, extending p's voter
// interval by s_l voters in front and s_r behind with s_l + s_r = s.
// ---------------------------------------------------------------------------

SolveOutcome solve_add_vi(const BriberyInstance& inst) {
    check_instance(inst, OperationMode::Add, DomainKind::VoterInterval, "solve_add_vi");
    const Election& e = inst.election;
    const int n = e.num_voters();
    std::vector<int> pos = inverse_permutation(inst.witness.order, n);
    std::vector<int> scores = approval_scores(e);

    int s = minimal_extra_approvals(scores, inst.committee_size, inst.preferred);
    if (s == 0) return SolveOutcome::from_cost(0, {}, inst.budget);

    std::vector<int> p_positions;
    for (int v = 0; v < n; ++v)
        if (ballot_contains(e.ballots[v], inst.preferred)) p_positions.push_back(pos[v]);
    std::sort(p_positions.begin(), p_positions.end());

    BestPlan best;
    auto consider = [&](const std::vector<int>& positions) {
        Cost total = 0;
        std::vector<UnitOperation> ops;
        for (int q : positions) {
            int voter = inst.witness.order[q];
            total = cost_sum(total, inst.costs.add_cost(voter, inst.preferred));
            if (!total) return;
            ops.push_back(UnitOperation::add(voter, inst.preferred));
        }
        best.offer(*total, std::move(ops));
    };

    if (p_positions.empty()) {
        // p approved by nobody: any contiguous placement of s approvals
        for (int w = 0; w + s <= n; ++w) {
            std::vector<int> positions(s);
            std::iota(positions.begin(), positions.end(), w);
            consider(positions);
        }
    } else {
        int i = p_positions.front(), j = p_positions.back();
        for (int sl = 0; sl <= s; ++sl) {
            int sr = s - sl;
            if (i - sl < 0 || j + sr > n - 1) continue;
            std::vector<int> positions;
            for (int q = i - sl; q < i; ++q) positions.push_back(q);
            for (int q = j + 1; q <= j + sr; ++q) positions.push_back(q);
            consider(positions);
        }
    }
    return best.outcome(inst.budget);
}

// ---------------------------------------------------------------------------
// Adding approvals, CI witness. Extending a voter whose ballot ends at the
// i-th candidate away from p forces approvals for everything between, so
// extensions are grouped into per-level buckets and combined by a dynamic
// program that tracks how many candidates may exceed p's final score.
// ---------------------------------------------------------------------------

namespace detail {

Cost side_bucket_cost(const AddCiSide& side, int level, int count) {
    if (count == 0) return 0;
    const std::vector<Money>& costs = side.bucket_costs[level - 1];
    if (count > static_cast<int>(costs.size())) return std::nullopt;
    Money total = 0;
    for (int i = 0; i < count; ++i) total += costs[i];
    return total;
}

std::vector<std::vector<std::vector<Cost>>> add_ci_table(const AddCiSide& side, int p_score,
                                                         int other_extensions, int max_extensions,
                                                         int max_exceeders) {
    const int levels = static_cast<int>(side.chain.size());
    std::vector table(levels + 1, std::vector(max_extensions + 1,
                                              std::vector<Cost>(max_exceeders + 1, std::nullopt)));
    for (int t = 0; t <= max_exceeders; ++t) table[0][0][t] = 0;
    for (int i = 1; i <= levels; ++i) {
        for (int e = 0; e <= max_extensions; ++e) {
            int threshold = p_score + e + other_extensions;
            int chi = side.chain_scores[i - 1] > threshold ? 1 : 0;
            for (int t = 0; t <= max_exceeders; ++t) {
                if (t - chi < 0) continue;
                Cost best = std::nullopt;
                for (int take = 0; take <= e; ++take) {
                    Cost c = cost_sum(side_bucket_cost(side, i, take), table[i - 1][e - take][t - chi]);
                    if (c && (!best || *c < *best)) best = c;
                }
                table[i][e][t] = best;
            }
        }
    }
    return table;
}

}  // namespace detail

namespace {

using detail::AddCiSide;

// Builds one side of the axis; `direction` is -1 for the left chain and +1
// for the right one, walking outward from p.
AddCiSide build_add_ci_side(const BriberyInstance& inst, const std::vector<int>& axis_at,
                            const std::vector<int>& pos, int p_pos, int direction,
                            const std::vector<int>& scores) {
    const Election& e = inst.election;
    AddCiSide side;
    int m = e.num_candidates;
    for (int q = p_pos + direction; q >= 0 && q < m; q += direction) side.chain.push_back(axis_at[q]);
    for (int c : side.chain) side.chain_scores.push_back(scores[c]);

    std::vector<std::vector<std::pair<Money, int>>> buckets(side.chain.size());
    for (int v = 0; v < e.num_voters(); ++v) {
        const Ballot& b = e.ballots[v];
        if (b.empty() || ballot_contains(b, inst.preferred)) continue;
        // innermost approved candidate decides the side and the level
        int inner = -1;
        for (int c : b) {
            int delta = (pos[c] - p_pos) * direction;
            if (delta < 0) { inner = -2; break; }  // other side
            if (inner == -1 || delta < (pos[inner] - p_pos) * direction) inner = c;
        }
        if (inner < 0) continue;
        int level = (pos[inner] - p_pos) * direction;
        Cost ext = 0;
        for (int q = pos[inner] - direction; q != p_pos; q -= direction)
            ext = cost_sum(ext, inst.costs.add_cost(v, axis_at[q]));
        ext = cost_sum(ext, inst.costs.add_cost(v, inst.preferred));
        if (!ext) continue;  // unpayable extension; the voter just keeps its ballot
        buckets[level - 1].push_back({*ext, v});
    }
    side.bucket_costs.resize(buckets.size());
    side.bucket_voters.resize(buckets.size());
    for (size_t i = 0; i < buckets.size(); ++i) {
        std::sort(buckets[i].begin(), buckets[i].end());
        for (auto& [c, v] : buckets[i]) {
            side.bucket_costs[i].push_back(c);
            side.bucket_voters[i].push_back(v);
        }
    }
    return side;
}

// extension ops for one voter of a given level
void emit_extension_ops(const BriberyInstance& inst, const std::vector<int>& axis_at, int p_pos,
                        int direction, int level, int voter, std::vector<UnitOperation>& ops) {
    for (int q = p_pos + direction * (level - 1); q != p_pos; q -= direction)
        ops.push_back(UnitOperation::add(voter, axis_at[q]));
    ops.push_back(UnitOperation::add(voter, inst.preferred));
}

// Reads one side's choice back out of the table.
void reconstruct_side(const BriberyInstance& inst, const AddCiSide& side,
                      const std::vector<std::vector<std::vector<Cost>>>& table, int p_score,
                      int other_extensions, int extensions, int exceeders,
                      const std::vector<int>& axis_at, int p_pos, int direction,
                      std::vector<UnitOperation>& ops) {
    int e = extensions, t = exceeders;
    for (int i = static_cast<int>(side.chain.size()); i >= 1; --i) {
        int threshold = p_score + e + other_extensions;
        int chi = side.chain_scores[i - 1] > threshold ? 1 : 0;
        for (int take = 0; take <= e; ++take) {
            Cost c = cost_sum(detail::side_bucket_cost(side, i, take), table[i - 1][e - take][t - chi]);
            if (c && table[i][e][t] && *c == *table[i][e][t]) {
                for (int j = 0; j < take; ++j)
                    emit_extension_ops(inst, axis_at, p_pos, direction, i, side.bucket_voters[i - 1][j],
                                       ops);
                e -= take;
                t -= chi;
                break;
            }
        }
    }
}

}  // namespace

SolveOutcome solve_add_ci(const BriberyInstance& inst) {
    check_instance(inst, OperationMode::Add, DomainKind::CandidateInterval, "solve_add_ci");
    const Election& e = inst.election;
    const int n = e.num_voters();
    const std::vector<int>& axis_at = inst.witness.order;
    std::vector<int> pos = inverse_permutation(axis_at, e.num_candidates);
    std::vector<int> scores = approval_scores(e);
    const int p = inst.preferred;
    const int p_pos = pos[p];
    const int k = inst.committee_size;

    AddCiSide left = build_add_ci_side(inst, axis_at, pos, p_pos, -1, scores);
    AddCiSide right = build_add_ci_side(inst, axis_at, pos, p_pos, +1, scores);

    // voters with empty ballots may be asked to approve p alone
    std::vector<std::pair<Money, int>> empties;
    for (int v = 0; v < n; ++v)
        if (e.ballots[v].empty()) {
            Cost c = inst.costs.add_cost(v, p);
            if (c) empties.push_back({*c, v});
        }
    std::sort(empties.begin(), empties.end());
    std::vector<Money> empty_prefix = {0};
    for (auto& [c, v] : empties) empty_prefix.push_back(empty_prefix.back() + c);

    auto pool_size = [](const AddCiSide& side) {
        int total = 0;
        for (const auto& b : side.bucket_costs) total += static_cast<int>(b.size());
        return total;
    };
    const int max_l = pool_size(left), max_r = pool_size(right);
    const int max_0 = static_cast<int>(empties.size());
    const int tcap_l = std::min<int>(k - 1, static_cast<int>(left.chain.size()));
    const int tcap_r = std::min<int>(k - 1, static_cast<int>(right.chain.size()));

    // f-tables per "other side + empties" total, built on demand
    std::vector<std::optional<std::vector<std::vector<std::vector<Cost>>>>> tables_l(n + 1), tables_r(n + 1);
    auto left_table = [&](int w) -> const std::vector<std::vector<std::vector<Cost>>>& {
        if (!tables_l[w]) tables_l[w] = detail::add_ci_table(left, scores[p], w, max_l, tcap_l);
        return *tables_l[w];
    };
    auto right_table = [&](int w) -> const std::vector<std::vector<std::vector<Cost>>>& {
        if (!tables_r[w]) tables_r[w] = detail::add_ci_table(right, scores[p], w, max_r, tcap_r);
        return *tables_r[w];
    };

    std::optional<Money> best;
    std::array<int, 5> pick = {0, 0, 0, 0, 0};  // x_l, x_r, x_0, t_l, t_r
    for (int xl = 0; xl <= max_l; ++xl)
        for (int xr = 0; xr <= max_r; ++xr)
            for (int x0 = 0; x0 <= max_0; ++x0) {
                const auto& tl = left_table(xr + x0);
                const auto& tr = right_table(xl + x0);
                for (int t_l = 0; t_l <= tcap_l && t_l <= k - 1; ++t_l) {
                    int t_r = std::min(tcap_r, k - 1 - t_l);
                    Cost total = cost_sum(tl[left.chain.size()][xl][t_l],
                                          tr[right.chain.size()][xr][t_r]);
                    total = cost_sum(total, Cost{empty_prefix[x0]});
                    if (total && (!best || *total < *best)) {
                        best = *total;
                        pick = {xl, xr, x0, t_l, t_r};
                    }
                }
            }

    if (!best) return SolveOutcome::infeasible();

    std::vector<UnitOperation> ops;
    auto [xl, xr, x0, t_l, t_r] = pick;
    reconstruct_side(inst, left, left_table(xr + x0), scores[p], xr + x0, xl, t_l, axis_at, p_pos, -1,
                     ops);
    reconstruct_side(inst, right, right_table(xl + x0), scores[p], xl + x0, xr, t_r, axis_at, p_pos, +1,
                     ops);
    for (int i = 0; i < x0; ++i) ops.push_back(UnitOperation::add(empties[i].second, p));
    std::sort(ops.begin(), ops.end());
    return SolveOutcome::from_cost(*best, BriberyPlan{ops, *best}, inst.budget);
}

// ---------------------------------------------------------------------------
// Deleting approvals, VI witness: superior candidates are drained to p's
// score independently, each by deleting a front/back split of its voter
// interval; the cheapest all-but-(k-1) are paid for.
// ---------------------------------------------------------------------------

SolveOutcome solve_del_vi(const BriberyInstance& inst) {
    check_instance(inst, OperationMode::Delete, DomainKind::VoterInterval, "solve_del_vi");
    const Election& e = inst.election;
    const int n = e.num_voters();
    std::vector<int> pos = inverse_permutation(inst.witness.order, n);
    std::vector<int> scores = approval_scores(e);
    const int s_p = scores[inst.preferred];

    struct Drain {
        Money cost;
        std::vector<UnitOperation> ops;
        int candidate;
    };
    std::vector<Drain> drains;
    int superiors = 0;
    for (int c = 0; c < e.num_candidates; ++c) {
        if (c == inst.preferred || scores[c] <= s_p) continue;
        ++superiors;
        std::vector<int> approver_at(n, -1);
        int a = n, b = -1;
        for (int v = 0; v < n; ++v)
            if (ballot_contains(e.ballots[v], c)) {
                approver_at[pos[v]] = v;
                a = std::min(a, pos[v]);
                b = std::max(b, pos[v]);
            }
        int t = scores[c] - s_p;
        std::optional<Money> best;
        std::vector<UnitOperation> best_ops;
        for (int i = 0; i <= t; ++i) {
            Cost total = 0;
            std::vector<UnitOperation> ops;
            for (int q = a; q < a + i; ++q) {
                total = cost_sum(total, inst.costs.delete_cost(approver_at[q], c));
                ops.push_back(UnitOperation::del(approver_at[q], c));
            }
            for (int q = b - (t - i) + 1; q <= b; ++q) {
                total = cost_sum(total, inst.costs.delete_cost(approver_at[q], c));
                ops.push_back(UnitOperation::del(approver_at[q], c));
            }
            if (!total) continue;
            std::sort(ops.begin(), ops.end());
            if (!best || *total < *best || (*total == *best && plan_less(ops, best_ops))) {
                best = *total;
                best_ops = std::move(ops);
            }
        }
        if (best) drains.push_back({*best, std::move(best_ops), c});
    }

    int need = superiors - (inst.committee_size - 1);
    if (need <= 0) return SolveOutcome::from_cost(0, {}, inst.budget);
    if (static_cast<int>(drains.size()) < need) return SolveOutcome::infeasible();

    std::sort(drains.begin(), drains.end(), [](const Drain& x, const Drain& y) {
        if (x.cost != y.cost) return x.cost < y.cost;
        return plan_less(x.ops, y.ops);
    });
    Money total = 0;
    std::vector<UnitOperation> ops;
    for (int i = 0; i < need; ++i) {
        total += drains[i].cost;
        ops.insert(ops.end(), drains[i].ops.begin(), drains[i].ops.end());
    }
    std::sort(ops.begin(), ops.end());
    return SolveOutcome::from_cost(total, BriberyPlan{ops, total}, inst.budget);
}

// ---------------------------------------------------------------------------
// Swaps to p, CI witness. A voter can donate at most one approval to p:
// the far endpoint of a ballot adjacent to p, or the sole candidate of a
// singleton ballot (a singleton stays an interval wherever it lands).
// ---------------------------------------------------------------------------

SolveOutcome solve_swap_to_p_ci(const BriberyInstance& inst) {
    check_instance(inst, OperationMode::SwapToP, DomainKind::CandidateInterval, "solve_swap_to_p_ci");
    const Election& e = inst.election;
    const int n = e.num_voters();
    const int p = inst.preferred;
    std::vector<int> pos = inverse_permutation(inst.witness.order, e.num_candidates);
    std::vector<int> scores = approval_scores(e);
    const int s_p = scores[p];
    const int p_pos = pos[p];

    struct EligibleOp {
        Money cost;
        int voter;
        int donor;
    };
    std::map<int, std::vector<EligibleOp>> pools;  // donor candidate -> ops, cheapest first
    int eligible_total = 0;
    for (int v = 0; v < n; ++v) {
        const Ballot& b = e.ballots[v];
        if (b.empty() || ballot_contains(b, p)) continue;
        int a = e.num_candidates, z = -1;
        for (int c : b) {
            a = std::min(a, pos[c]);
            z = std::max(z, pos[c]);
        }
        int donor;
        if (z == p_pos - 1) donor = inst.witness.order[a];
        else if (a == p_pos + 1) donor = inst.witness.order[z];
        else if (a == z) donor = inst.witness.order[a];
        else continue;
        Cost c = inst.costs.swap_cost(v, donor, p);
        if (!c) continue;
        pools[donor].push_back({*c, v, donor});
        ++eligible_total;
    }
    for (auto& [donor, ops] : pools)
        std::sort(ops.begin(), ops.end(), [](const EligibleOp& x, const EligibleOp& y) {
            return std::tie(x.cost, x.voter) < std::tie(y.cost, y.voter);
        });

    BestPlan best;
    for (int y = s_p; y <= std::min(n, s_p + eligible_total); ++y) {
        std::vector<std::pair<Money, int>> drain_costs;  // (cost, candidate), finite only
        std::vector<int> must_drain;
        for (int c = 0; c < e.num_candidates; ++c) {
            if (c == p || scores[c] <= y) continue;
            must_drain.push_back(c);
        }
        int need = static_cast<int>(must_drain.size()) - (inst.committee_size - 1);
        std::map<int, int> drained_count;
        Money cost = 0;
        std::vector<UnitOperation> ops;
        bool viable = true;
        if (need > 0) {
            for (int c : must_drain) {
                int cnt = scores[c] - y;
                const auto it = pools.find(c);
                if (it == pools.end() || static_cast<int>(it->second.size()) < cnt) continue;
                Money f = 0;
                for (int i = 0; i < cnt; ++i) f += it->second[i].cost;
                drain_costs.push_back({f, c});
            }
            if (static_cast<int>(drain_costs.size()) < need) continue;
            std::sort(drain_costs.begin(), drain_costs.end());
            for (int i = 0; i < need; ++i) {
                int c = drain_costs[i].second;
                int cnt = scores[c] - y;
                drained_count[c] = cnt;
                cost += drain_costs[i].first;
                for (int j = 0; j < cnt; ++j)
                    ops.push_back(UnitOperation::swap(pools[c][j].voter, c, p));
            }
        }
        // top p up to exactly y approvals with the cheapest unused moves
        int performed = static_cast<int>(ops.size());
        int missing = (y - s_p) - performed;
        if (missing > 0) {
            std::vector<EligibleOp> rest;
            for (auto& [donor, pool] : pools) {
                int skip = drained_count.count(donor) ? drained_count[donor] : 0;
                for (size_t i = skip; i < pool.size(); ++i) rest.push_back(pool[i]);
            }
            std::sort(rest.begin(), rest.end(), [](const EligibleOp& x, const EligibleOp& y2) {
                return std::tie(x.cost, x.voter) < std::tie(y2.cost, y2.voter);
            });
            if (static_cast<int>(rest.size()) < missing) viable = false;
            for (int i = 0; viable && i < missing; ++i) {
                cost += rest[i].cost;
                ops.push_back(UnitOperation::swap(rest[i].voter, rest[i].donor, p));
            }
        }
        if (viable) best.offer(cost, std::move(ops));
    }
    return best.outcome(inst.budget);
}

// ---------------------------------------------------------------------------
// Swaps to p, VI witness: shortest paths over nodes (a, b, d) where p's
// approvals occupy voter positions [a, b] and d dangerous candidates still
// exceed the target score s. An edge grows one side of the interval with
// approvals donated by a single candidate whose remaining approvers must
// stay contiguous; dangerous candidates can donate on at most one edge of
// any path, so original-election score accounting is exact.
// ---------------------------------------------------------------------------

namespace {

struct SwapViBranch {
    Election election;
    Money base_cost = 0;
    std::vector<UnitOperation> base_ops;
};

struct SwapViSearch {
    const BriberyInstance& inst;
    const std::vector<int>& order;  // position -> voter
    int n, m, p;

    // per candidate: sorted approver positions and a membership bitmap
    std::vector<std::vector<int>> approvers;
    std::vector<std::vector<char>> approves;
    std::vector<int> base_scores;

    SwapViSearch(const BriberyInstance& instance, const std::vector<int>& voter_order,
                 const Election& branched)
        : inst(instance), order(voter_order) {
        n = branched.num_voters();
        m = branched.num_candidates;
        p = instance.preferred;
        std::vector<int> pos = inverse_permutation(voter_order, n);
        approvers.assign(m, {});
        approves.assign(m, std::vector<char>(n, 0));
        for (int v = 0; v < n; ++v)
            for (int c : branched.ballots[v]) {
                approvers[c].push_back(pos[v]);
                approves[c][pos[v]] = 1;
            }
        for (auto& ps : approvers) std::sort(ps.begin(), ps.end());
        base_scores.resize(m);
        for (int c = 0; c < m; ++c) base_scores[c] = static_cast<int>(approvers[c].size());
    }

    // remaining approvers of c stay contiguous after removing positions [q1, q2]
    bool removal_keeps_interval(int c, int q1, int q2) const {
        const std::vector<int>& ps = approvers[c];
        auto lo = std::lower_bound(ps.begin(), ps.end(), q1);
        auto hi = std::upper_bound(ps.begin(), ps.end(), q2);
        int before = static_cast<int>(lo - ps.begin());
        int after = static_cast<int>(ps.end() - hi);
        if (before > 0 && after > 0) return false;  // removed run sits strictly inside
        if (before > 0) return ps[before - 1] - ps[0] + 1 == before;
        if (after > 0) return ps.back() - *hi + 1 == after;
        return true;
    }

    Cost stretch_cost(int c, int q1, int q2) const {
        Cost total = 0;
        for (int q = q1; q <= q2; ++q) {
            if (!approves[c][q]) return std::nullopt;
            total = cost_sum(total, inst.costs.swap_cost(order[q], c, p));
            if (!total) return std::nullopt;
        }
        return total;
    }
};

}  // namespace

SolveOutcome solve_swap_to_p_vi(const BriberyInstance& inst) {
    check_instance(inst, OperationMode::SwapToP, DomainKind::VoterInterval, "solve_swap_to_p_vi");
    const Election& e = inst.election;
    const int n = e.num_voters();
    const int p = inst.preferred;
    const int k = inst.committee_size;

    if (can_join_winning_committee(e, k, p)) return SolveOutcome::from_cost(0, {}, inst.budget);

    // Branches: the election as-is, or (when nobody approves p yet) every
    // possible first swap handing p a single approval. Only swaps removing
    // an endpoint of the donor's interval are tried: any valid bribery
    // donates at least one such endpoint (donations are a prefix and/or
    // suffix of the donor's approvers), and the restriction keeps every
    // column of the branched election an interval.
    std::vector<SwapViBranch> branches;
    if (approval_score(e, p) > 0) {
        branches.push_back({e, 0, {}});
    } else {
        std::vector<int> position = inverse_permutation(inst.witness.order, n);
        std::vector<int> col_lo(e.num_candidates, n), col_hi(e.num_candidates, -1);
        for (int v = 0; v < n; ++v)
            for (int c : e.ballots[v]) {
                col_lo[c] = std::min(col_lo[c], position[v]);
                col_hi[c] = std::max(col_hi[c], position[v]);
            }
        for (int v = 0; v < n; ++v)
            for (int c : e.ballots[v]) {
                if (position[v] != col_lo[c] && position[v] != col_hi[c]) continue;
                Cost cost = inst.costs.swap_cost(v, c, p);
                if (!cost) continue;
                UnitOperation op = UnitOperation::swap(v, c, p);
                SwapViBranch br{apply_plan(e, BriberyPlan{{op}, *cost}), *cost, {op}};
                branches.push_back(std::move(br));
            }
    }

    BestPlan best;
    for (const SwapViBranch& branch : branches) {
        SwapViSearch ctx(inst, inst.witness.order, branch.election);
        const std::vector<int>& p_at = ctx.approvers[p];
        int x = p_at.front(), y = p_at.back();

        for (int alpha = 0; alpha <= x; ++alpha)
            for (int beta = y; beta < n; ++beta) {
                const int s = beta - alpha + 1;
                std::vector<char> dangerous(ctx.m, 0);
                int danger_count = 0;
                for (int c = 0; c < ctx.m; ++c)
                    if (c != p && ctx.base_scores[c] > s) {
                        dangerous[c] = 1;
                        ++danger_count;
                    }

                const int aw = x - alpha + 1, bw = beta - y + 1, dw = danger_count + 1;
                auto node_id = [&](int a, int b, int d) {
                    return ((a - alpha) * bw + (b - y)) * dw + d;
                };
                std::vector<Cost> dist(aw * bw * dw, std::nullopt);
                struct Parent {
                    int a, b, d, candidate, q1, q2;
                };
                std::vector<std::optional<Parent>> parent(dist.size());
                using QItem = std::tuple<Money, int, int, int>;  // dist, a, b, d
                std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
                dist[node_id(x, y, danger_count)] = 0;
                pq.push({0, x, y, danger_count});

                auto relax = [&](int a, int b, int d, Money nd, Parent from) {
                    int id = node_id(a, b, d);
                    if (!dist[id] || nd < *dist[id]) {
                        dist[id] = nd;
                        parent[id] = from;
                        pq.push({nd, a, b, d});
                    }
                };

                while (!pq.empty()) {
                    auto [dcur, a, b, d] = pq.top();
                    pq.pop();
                    int id = node_id(a, b, d);
                    if (!dist[id] || *dist[id] != dcur) continue;
                    for (int c = 0; c < ctx.m; ++c) {
                        if (c == p) continue;
                        // grow left: donate positions [a2, a-1]
                        for (int a2 = a - 1; a2 >= alpha; --a2) {
                            if (!ctx.approves[c][a2]) break;  // longer stretches stay broken
                            Cost w = ctx.stretch_cost(c, a2, a - 1);
                            if (!w) continue;
                            if (!ctx.removal_keeps_interval(c, a2, a - 1)) continue;
                            int nd = d;
                            if (dangerous[c] && ctx.base_scores[c] - (a - a2) <= s) {
                                if (d == 0) continue;  // unreachable for dangerous donors
                                nd = d - 1;
                            }
                            relax(a2, b, nd, dcur + *w, {a, b, d, c, a2, a - 1});
                        }
                        // grow right: donate positions [b+1, b2]
                        for (int b2 = b + 1; b2 <= beta; ++b2) {
                            if (!ctx.approves[c][b2]) break;
                            Cost w = ctx.stretch_cost(c, b + 1, b2);
                            if (!w) continue;
                            if (!ctx.removal_keeps_interval(c, b + 1, b2)) continue;
                            int nd = d;
                            if (dangerous[c] && ctx.base_scores[c] - (b2 - b) <= s) {
                                if (d == 0) continue;
                                nd = d - 1;
                            }
                            relax(a, b2, nd, dcur + *w, {a, b, d, c, b + 1, b2});
                        }
                    }
                }

                for (int d = 0; d <= std::min(danger_count, k - 1); ++d) {
                    int id = node_id(alpha, beta, d);
                    if (!dist[id]) continue;
                    std::vector<UnitOperation> ops = branch.base_ops;
                    int a = alpha, b = beta, dd = d;
                    while (!(a == x && b == y && dd == danger_count)) {
                        const Parent& pr = *parent[node_id(a, b, dd)];
                        for (int q = pr.q1; q <= pr.q2; ++q)
                            ops.push_back(UnitOperation::swap(inst.witness.order[q], pr.candidate, p));
                        a = pr.a;
                        b = pr.b;
                        dd = pr.d;
                    }
                    best.offer(branch.base_cost + *dist[id], std::move(ops));
                }
            }
    }
    return best.outcome(inst.budget);
}

}  // namespace bribery
