#include "bribery/exact_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <tuple>

#include "bribery/poly_solvers.hpp"
#include "bribery/structure.hpp"

namespace bribery {

namespace {

using Profile = std::vector<Ballot>;

struct WitnessChecker {
    DomainKind kind;
    std::vector<int> pos;  // candidate (CI) or voter (VI) index -> position
    int m = 0, n = 0;

    explicit WitnessChecker(const BriberyInstance& inst) {
        kind = inst.witness.kind;
        m = inst.election.num_candidates;
        n = inst.election.num_voters();
        if (kind != DomainKind::Unrestricted)
            pos = inverse_permutation(inst.witness.order,
                                      kind == DomainKind::CandidateInterval ? m : n);
    }

    bool ok(const Profile& profile) const {
        switch (kind) {
            case DomainKind::Unrestricted: return true;
            case DomainKind::CandidateInterval: {
                for (const Ballot& b : profile) {
                    if (b.empty()) continue;
                    int lo = m, hi = -1;
                    for (int c : b) {
                        lo = std::min(lo, pos[c]);
                        hi = std::max(hi, pos[c]);
                    }
                    if (hi - lo + 1 != static_cast<int>(b.size())) return false;
                }
                return true;
            }
            case DomainKind::VoterInterval: {
                std::vector<int> lo(m, n), hi(m, -1), count(m, 0);
                for (int v = 0; v < n; ++v)
                    for (int c : profile[v]) {
                        lo[c] = std::min(lo[c], pos[v]);
                        hi[c] = std::max(hi[c], pos[v]);
                        ++count[c];
                    }
                for (int c = 0; c < m; ++c)
                    if (count[c] > 0 && hi[c] - lo[c] + 1 != count[c]) return false;
                return true;
            }
        }
        return false;
    }
};

bool profile_p_wins(const Profile& profile, int m, int k, int p) {
    std::vector<int> scores(m, 0);
    for (const Ballot& b : profile)
        for (int c : b) ++scores[c];
    int above = 0;
    for (int c = 0; c < m; ++c)
        if (c != p && scores[c] > scores[p]) ++above;
    return above <= k - 1;
}

}  // namespace

OracleOptions oracle_options_from_env() {
    OracleOptions opt;
    if (const char* env = std::getenv("BRIBERY_MAX_STATES")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) opt.max_states = v;
    }
    return opt;
}

SolveOutcome oracle_solve(const BriberyInstance& inst, const OracleOptions& options) {
    inst.check_valid();
    if (!witness_holds(inst.election, inst.witness))
        throw input_error("oracle_solve: election does not satisfy its witness");

    const Election& e = inst.election;
    const int m = e.num_candidates, n = e.num_voters();
    const int p = inst.preferred;
    const OperationMode mode = inst.costs.mode;
    // For Add/Delete every final-valid plan reorders into a stepwise-valid
    // one, so invalid intermediate profiles can be discarded. Not true for
    // swaps.
    const bool prune_intermediate = mode == OperationMode::Add || mode == OperationMode::Delete;
    WitnessChecker checker(inst);

    std::map<Profile, int> index_of;
    std::vector<Profile> profiles;
    std::vector<Money> dist;
    std::vector<std::pair<int, UnitOperation>> parent;  // (prev state, op); -1 for the root

    auto intern = [&](const Profile& profile) -> int {
        auto [it, fresh] = index_of.try_emplace(profile, static_cast<int>(profiles.size()));
        if (fresh) {
            if (static_cast<long long>(profiles.size()) >= options.max_states)
                throw resource_error("oracle state cap of " + std::to_string(options.max_states) +
                                     " states exceeded (set BRIBERY_MAX_STATES or --max-states)");
            profiles.push_back(profile);
            dist.push_back(-1);
            parent.push_back({-1, UnitOperation{}});
        }
        return it->second;
    };

    using QItem = std::pair<Money, int>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
    int start = intern(e.ballots);
    dist[start] = 0;
    pq.push({0, start});

    auto enumerate_ops = [&](const Profile& profile, auto&& visit) {
        for (int v = 0; v < n; ++v) {
            const Ballot& b = profile[v];
            switch (mode) {
                case OperationMode::Add:
                    for (int c = 0; c < m; ++c)
                        if (!ballot_contains(b, c)) visit(UnitOperation::add(v, c), inst.costs.add_cost(v, c));
                    break;
                case OperationMode::Delete:
                    for (int c : b) visit(UnitOperation::del(v, c), inst.costs.delete_cost(v, c));
                    break;
                case OperationMode::Swap:
                    for (int from : b)
                        for (int to = 0; to < m; ++to)
                            if (to != from && !ballot_contains(b, to))
                                visit(UnitOperation::swap(v, from, to), inst.costs.swap_cost(v, from, to));
                    break;
                case OperationMode::SwapToP:
                    if (ballot_contains(b, p)) break;
                    for (int from : b) visit(UnitOperation::swap(v, from, p), inst.costs.swap_cost(v, from, p));
                    break;
            }
        }
    };

    while (!pq.empty()) {
        auto [cost, id] = pq.top();
        pq.pop();
        if (dist[id] != cost) continue;
        Profile profile = profiles[id];

        // with intermediate pruning every reachable state is witness-valid
        bool valid_here = prune_intermediate || checker.ok(profile);
        if (valid_here && profile_p_wins(profile, m, inst.committee_size, p)) {
            std::vector<UnitOperation> ops;
            for (int cur = id; parent[cur].first != -1; cur = parent[cur].first)
                ops.push_back(parent[cur].second);
            std::reverse(ops.begin(), ops.end());
            return SolveOutcome::from_cost(cost, BriberyPlan{ops, cost}, inst.budget);
        }

        enumerate_ops(profile, [&](const UnitOperation& op, Cost op_cost) {
            if (!op_cost) return;
            Money next_cost = cost + *op_cost;
            if (next_cost > inst.budget) return;
            Profile next = profile;
            Ballot& nb = next[op.voter];
            if (op.kind == OpKind::Add) ballot_add(nb, op.candidate);
            else if (op.kind == OpKind::Delete) ballot_remove(nb, op.candidate);
            else {
                ballot_remove(nb, op.from);
                ballot_add(nb, op.to);
            }
            if (prune_intermediate && !checker.ok(next)) return;
            int nid = intern(next);
            if (dist[nid] == -1 || next_cost < dist[nid]) {
                dist[nid] = next_cost;
                parent[nid] = {id, op};
                pq.push({next_cost, nid});
            }
        });
    }
    return SolveOutcome::infeasible();
}

// ---------------------------------------------------------------------------
// Exact deletion solver.
// ---------------------------------------------------------------------------

namespace {

// Unrestricted witness: drain each superior candidate with its cheapest
// deletions, independently; pay for the cheapest all-but-(k-1).
SolveOutcome delete_unrestricted(const BriberyInstance& inst) {
    const Election& e = inst.election;
    std::vector<int> scores = approval_scores(e);
    const int s_p = scores[inst.preferred];
    struct Drain {
        Money cost;
        std::vector<UnitOperation> ops;
    };
    std::vector<Drain> drains;
    int superiors = 0;
    for (int c = 0; c < e.num_candidates; ++c) {
        if (c == inst.preferred || scores[c] <= s_p) continue;
        ++superiors;
        std::vector<std::pair<Money, int>> options;  // (cost, voter)
        for (int v = 0; v < e.num_voters(); ++v)
            if (ballot_contains(e.ballots[v], c)) {
                Cost dc = inst.costs.delete_cost(v, c);
                if (dc) options.push_back({*dc, v});
            }
        int t = scores[c] - s_p;
        if (static_cast<int>(options.size()) < t) continue;
        std::sort(options.begin(), options.end());
        Drain d{0, {}};
        for (int i = 0; i < t; ++i) {
            d.cost += options[i].first;
            d.ops.push_back(UnitOperation::del(options[i].second, c));
        }
        drains.push_back(std::move(d));
    }
    int need = superiors - (inst.committee_size - 1);
    if (need <= 0) return SolveOutcome::from_cost(0, {}, inst.budget);
    if (static_cast<int>(drains.size()) < need) return SolveOutcome::infeasible();
    std::sort(drains.begin(), drains.end(),
              [](const Drain& a, const Drain& b) { return a.cost < b.cost; });
    Money total = 0;
    std::vector<UnitOperation> ops;
    for (int i = 0; i < need; ++i) {
        total += drains[i].cost;
        ops.insert(ops.end(), drains[i].ops.begin(), drains[i].ops.end());
    }
    std::sort(ops.begin(), ops.end());
    return SolveOutcome::from_cost(total, BriberyPlan{ops, total}, inst.budget);
}

struct TrimOption {
    Ballot kept;
    Money cost = 0;
    std::vector<UnitOperation> ops;
    bool keeps_p = false;
};

// CI witness: per-voter Pareto-optimal trims + depth-first search with
// guaranteed-floor pruning.
SolveOutcome delete_ci_branch_and_bound(const BriberyInstance& inst, const BbOptions& options) {
    const Election& e = inst.election;
    const int m = e.num_candidates, n = e.num_voters();
    const int p = inst.preferred;
    std::vector<int> pos = inverse_permutation(inst.witness.order, m);
    const std::vector<int>& axis_at = inst.witness.order;

    std::vector<std::vector<TrimOption>> choices(n);
    for (int v = 0; v < n; ++v) {
        const Ballot& b = e.ballots[v];
        std::vector<TrimOption> raw;
        if (b.empty()) {
            raw.push_back({{}, 0, {}, false});
        } else {
            int a = m, z = -1;
            for (int c : b) {
                a = std::min(a, pos[c]);
                z = std::max(z, pos[c]);
            }
            auto trim = [&](int keep_lo, int keep_hi) {  // keep_lo > keep_hi: delete all
                TrimOption opt;
                Cost total = 0;
                for (int q = a; q <= z; ++q) {
                    int c = axis_at[q];
                    if (q >= keep_lo && q <= keep_hi) {
                        opt.kept.push_back(c);
                        if (c == p) opt.keeps_p = true;
                    } else {
                        total = cost_sum(total, inst.costs.delete_cost(v, c));
                        opt.ops.push_back(UnitOperation::del(v, c));
                    }
                }
                if (!total) return;
                opt.cost = *total;
                std::sort(opt.kept.begin(), opt.kept.end());
                raw.push_back(std::move(opt));
            };
            trim(a, z);  // keep everything
            for (int lo = a; lo <= z; ++lo)
                for (int hi = lo; hi <= z; ++hi)
                    if (!(lo == a && hi == z)) trim(lo, hi);
            trim(z + 1, z);  // delete everything
        }
        // Pareto filter: a trim is dominated by a cheaper-or-equal one that
        // keeps a subset of its candidates without giving up p.
        std::vector<TrimOption> kept;
        for (size_t i = 0; i < raw.size(); ++i) {
            bool dominated = false;
            for (size_t j = 0; j < raw.size() && !dominated; ++j) {
                if (i == j) continue;
                const TrimOption& x = raw[i];
                const TrimOption& y = raw[j];
                if (y.cost > x.cost) continue;
                if (x.keeps_p && !y.keeps_p) continue;
                bool subset = std::includes(x.kept.begin(), x.kept.end(), y.kept.begin(), y.kept.end());
                if (!subset) continue;
                if (y.kept.size() == x.kept.size() && y.cost == x.cost) {
                    if (j < i) dominated = true;  // exact duplicate, keep the first
                } else {
                    dominated = true;
                }
            }
            if (!dominated) kept.push_back(raw[i]);
        }
        std::sort(kept.begin(), kept.end(), [](const TrimOption& x, const TrimOption& y) {
            if (x.cost != y.cost) return x.cost < y.cost;
            return x.kept.size() > y.kept.size();
        });
        choices[v] = std::move(kept);
    }

    std::vector<int> voter_order(n);
    for (int v = 0; v < n; ++v) voter_order[v] = v;
    std::sort(voter_order.begin(), voter_order.end(), [&](int a, int b) {
        if (choices[a].size() != choices[b].size()) return choices[a].size() < choices[b].size();
        return a < b;
    });

    // suffix floors: approvals a candidate keeps no matter what, and
    // approvals p could still keep, over the not-yet-assigned voters
    std::vector<std::vector<int>> unavoidable(n + 1, std::vector<int>(m, 0));
    std::vector<int> p_possible(n + 1, 0);
    for (int r = n - 1; r >= 0; --r) {
        unavoidable[r] = unavoidable[r + 1];
        p_possible[r] = p_possible[r + 1];
        int v = voter_order[r];
        bool p_somewhere = false;
        for (int c = 0; c < m; ++c) {
            bool everywhere = true;
            for (const TrimOption& opt : choices[v]) {
                if (!ballot_contains(opt.kept, c)) everywhere = false;
                if (c == p && opt.keeps_p) p_somewhere = true;
            }
            if (everywhere) ++unavoidable[r][c];
        }
        if (p_somewhere) ++p_possible[r];
    }

    std::vector<int> scores(m, 0);
    std::vector<int> chosen(n, -1);
    std::optional<Money> best;
    std::vector<int> best_choice;
    long long nodes = 0;

    auto dfs = [&](auto&& self, int rank, Money cost) -> void {
        if (++nodes > options.max_nodes)
            throw resource_error("bb_solve_deletions node cap of " + std::to_string(options.max_nodes) +
                                 " exceeded");
        if (best && cost >= *best) return;
        int ceiling = scores[p] + p_possible[rank];
        int floored_above = 0;
        for (int c = 0; c < m; ++c)
            if (c != p && scores[c] + unavoidable[rank][c] > ceiling) ++floored_above;
        if (floored_above >= inst.committee_size) return;
        if (rank == n) {
            int above = 0;
            for (int c = 0; c < m; ++c)
                if (c != p && scores[c] > scores[p]) ++above;
            if (above <= inst.committee_size - 1) {
                best = cost;
                best_choice.assign(chosen.begin(), chosen.end());
            }
            return;
        }
        int v = voter_order[rank];
        for (size_t oi = 0; oi < choices[v].size(); ++oi) {
            const TrimOption& opt = choices[v][oi];
            for (int c : opt.kept) ++scores[c];
            chosen[v] = static_cast<int>(oi);
            self(self, rank + 1, cost + opt.cost);
            for (int c : opt.kept) --scores[c];
        }
        chosen[v] = -1;
    };
    dfs(dfs, 0, 0);

    if (!best) return SolveOutcome::infeasible();
    std::vector<UnitOperation> ops;
    for (int v = 0; v < n; ++v) {
        const TrimOption& opt = choices[v][best_choice[v]];
        ops.insert(ops.end(), opt.ops.begin(), opt.ops.end());
    }
    std::sort(ops.begin(), ops.end());
    return SolveOutcome::from_cost(*best, BriberyPlan{ops, *best}, inst.budget);
}

}  // namespace

SolveOutcome bb_solve_deletions(const BriberyInstance& inst, const BbOptions& options) {
    inst.check_valid();
    if (inst.costs.mode != OperationMode::Delete)
        throw input_error("bb_solve_deletions: mode must be Delete");
    if (!witness_holds(inst.election, inst.witness))
        throw input_error("bb_solve_deletions: election does not satisfy its witness");
    switch (inst.witness.kind) {
        case DomainKind::CandidateInterval: return delete_ci_branch_and_bound(inst, options);
        case DomainKind::VoterInterval: return solve_del_vi(inst);
        case DomainKind::Unrestricted: return delete_unrestricted(inst);
    }
    throw input_error("bb_solve_deletions: unknown witness");
}

// ---------------------------------------------------------------------------
// Structure-aware exhaustive search for unit-price Swap-CI instances.
// ---------------------------------------------------------------------------

SolveOutcome solve_swap_ci_unit(const BriberyInstance& inst) {
    inst.check_valid();
    if (inst.costs.mode != OperationMode::Swap)
        throw input_error("solve_swap_ci_unit: mode must be Swap");
    if (inst.witness.kind != DomainKind::CandidateInterval)
        throw input_error("solve_swap_ci_unit: CI witness required");
    if (inst.costs.default_cost != Cost{1} || !inst.costs.table.empty())
        throw input_error("solve_swap_ci_unit: unit prices required");
    if (!witness_holds(inst.election, inst.witness))
        throw input_error("solve_swap_ci_unit: election does not satisfy its witness");

    const Election& e = inst.election;
    const int m = e.num_candidates, n = e.num_voters();
    const int p = inst.preferred;
    const Money B = inst.budget;
    std::vector<int> pos = inverse_permutation(inst.witness.order, m);
    const std::vector<int>& axis_at = inst.witness.order;
    std::vector<int> scores = approval_scores(e);
    const int s_p = scores[p];
    const int p_pos = pos[p];

    struct Interval {
        int lo = 0, hi = -1;
        bool empty() const { return lo > hi; }
        int size() const { return hi - lo + 1; }
    };
    std::vector<Interval> spans(n);
    for (int v = 0; v < n; ++v) {
        Interval iv{m, -1};
        for (int c : e.ballots[v]) {
            iv.lo = std::min(iv.lo, pos[c]);
            iv.hi = std::max(iv.hi, pos[c]);
        }
        if (!e.ballots[v].empty()) spans[v] = iv;
        else spans[v] = Interval{};
    }

    // classification by initial score relative to p
    auto is_safe_high = [&](int c) { return c != p && scores[c] - B > s_p; };
    auto is_threat = [&](int c) { return c != p && scores[c] > s_p && !is_safe_high(c); };

    // structural facts the domination argument needs
    for (int v = 0; v < n; ++v) {
        const Interval& iv = spans[v];
        if (iv.empty()) continue;
        bool has_p = iv.lo <= p_pos && p_pos <= iv.hi;
        // ballots short enough to relocate wholesale within the budget can
        // reach arbitrary intervals; the shift model would be incomplete
        if (iv.size() >= 2 && iv.size() <= B)
            throw input_error("solve_swap_ci_unit: voter " + std::to_string(v) +
                              " holds a ballot that could relocate within the budget");
        if (!has_p) {
            if (iv.size() == 1)
                throw input_error("solve_swap_ci_unit: voter " + std::to_string(v) +
                                  " holds a singleton ballot that could reach p");
            Money reach = iv.lo > p_pos ? iv.lo - p_pos : p_pos - iv.hi;
            if (reach <= B)
                throw input_error("solve_swap_ci_unit: voter " + std::to_string(v) +
                                  " could add an approval for p within the budget");
        } else if (iv.size() > 1) {
            Money drop_p = std::min(p_pos - iv.lo, iv.hi - p_pos) + 1;
            if (drop_p <= B)
                throw input_error("solve_swap_ci_unit: voter " + std::to_string(v) +
                                  " could remove p's approval within the budget");
        }
        // no voter may be able to demote a candidate at or below p's score
        for (int q = iv.lo; q <= iv.hi; ++q) {
            int c = axis_at[q];
            if (c == p || scores[c] > s_p) continue;
            Money removal = iv.size() == 1 ? 1 : std::min(q - iv.lo, iv.hi - q) + 1;
            if (removal <= B)
                throw input_error("solve_swap_ci_unit: voter " + std::to_string(v) +
                                  " could demote low-scoring candidate " + std::to_string(c));
        }
    }

    // relevant voters: able to remove an approval from some threat within B
    std::vector<int> relevant;
    for (int v = 0; v < n; ++v) {
        const Interval& iv = spans[v];
        if (iv.empty() || iv.size() == 1) continue;  // singletons are {p} holders, excluded above
        for (int q = iv.lo; q <= iv.hi; ++q) {
            if (!is_threat(axis_at[q])) continue;
            if (std::min(q - iv.lo, iv.hi - q) + 1 <= B) {
                relevant.push_back(v);
                break;
            }
        }
    }

    const int safe_high_count = [&] {
        int count = 0;
        for (int c = 0; c < m; ++c)
            if (is_safe_high(c)) ++count;
        return count;
    }();

    std::vector<int> shift(relevant.size(), 0);
    std::optional<Money> best;
    std::vector<int> best_shift;
    std::vector<int> delta(m, 0);

    auto evaluate = [&](Money cost) {
        int above = safe_high_count;
        for (int c = 0; c < m; ++c)
            if (c != p && !is_safe_high(c) && scores[c] + delta[c] > s_p) ++above;
        if (above <= inst.committee_size - 1 && (!best || cost < *best)) {
            best = cost;
            best_shift.assign(shift.begin(), shift.end());
        }
    };

    auto dfs = [&](auto&& self, size_t idx, Money cost) -> void {
        if (best && cost >= *best) return;
        evaluate(cost);
        if (idx == relevant.size()) return;
        self(self, idx + 1, cost);  // this voter stays put
        const Interval& iv = spans[relevant[idx]];
        for (int dir : {-1, +1}) {
            Money budget_left = B - cost;
            for (int step = 1; step <= budget_left; ++step) {
                int d = dir * step;
                if (iv.lo + d < 0 || iv.hi + d >= m) break;
                // shifting by d removes `step` positions at one end and adds
                // `step` at the other
                for (int r = 0; r < step; ++r) {
                    int removed = dir > 0 ? iv.lo + r : iv.hi - r;
                    int added = dir > 0 ? iv.hi + 1 + r : iv.lo - 1 - r;
                    --delta[axis_at[removed]];
                    ++delta[axis_at[added]];
                }
                shift[idx] = d;
                self(self, idx + 1, cost + step);
                for (int r = 0; r < step; ++r) {
                    int removed = dir > 0 ? iv.lo + r : iv.hi - r;
                    int added = dir > 0 ? iv.hi + 1 + r : iv.lo - 1 - r;
                    ++delta[axis_at[removed]];
                    --delta[axis_at[added]];
                }
                shift[idx] = 0;
            }
        }
    };
    dfs(dfs, 0, 0);

    if (!best) return SolveOutcome::infeasible();
    std::vector<UnitOperation> ops;
    for (size_t i = 0; i < relevant.size(); ++i) {
        int d = best_shift[i];
        if (d == 0) continue;
        const Interval& iv = spans[relevant[i]];
        for (int r = 0; r < std::abs(d); ++r) {
            if (d > 0)
                ops.push_back(UnitOperation::swap(relevant[i], axis_at[iv.lo + r], axis_at[iv.hi + 1 + r]));
            else
                ops.push_back(UnitOperation::swap(relevant[i], axis_at[iv.hi - r], axis_at[iv.lo - 1 - r]));
        }
    }
    return SolveOutcome::from_cost(*best, BriberyPlan{ops, *best}, inst.budget);
}

}  // namespace bribery
