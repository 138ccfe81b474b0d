#include "bribery/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bribery/rng.hpp"
#include "bribery/structure.hpp"

namespace bribery {

void Rx3cInstance::check_valid() const {
    if (n < 1) throw input_error("RX3C: n must be positive");
    if (static_cast<int>(sets.size()) != 3 * n) throw input_error("RX3C: expected 3n sets");
    std::vector<int> occurrences(3 * n, 0);
    for (const auto& s : sets) {
        if (!(0 <= s[0] && s[0] < s[1] && s[1] < s[2] && s[2] < 3 * n))
            throw input_error("RX3C: sets must hold three distinct sorted elements");
        for (int e : s) ++occurrences[e];
    }
    for (int e = 0; e < 3 * n; ++e)
        if (occurrences[e] != 3)
            throw input_error("RX3C: element " + std::to_string(e) + " occurs " +
                              std::to_string(occurrences[e]) + " times, expected 3");
}

void CubicGraph::check_valid() const {
    if (num_vertices < 4 || num_vertices % 2 != 0)
        throw input_error("cubic graph needs an even vertex count >= 4");
    std::set<std::pair<int, int>> seen;
    std::vector<int> degree(num_vertices, 0);
    for (auto [a, b] : edges) {
        if (!(0 <= a && a < b && b < num_vertices)) throw input_error("cubic graph: bad edge");
        if (!seen.insert({a, b}).second) throw input_error("cubic graph: duplicate edge");
        ++degree[a];
        ++degree[b];
    }
    for (int v = 0; v < num_vertices; ++v)
        if (degree[v] != 3)
            throw input_error("cubic graph: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(degree[v]));
}

int find_role(const std::vector<std::string>& roles, const std::string& role) {
    for (size_t i = 0; i < roles.size(); ++i)
        if (roles[i] == role) return static_cast<int>(i);
    throw input_error("role not found: " + role);
}

std::vector<int> find_roles_with_prefix(const std::vector<std::string>& roles,
                                        const std::string& prefix) {
    std::vector<int> out;
    for (size_t i = 0; i < roles.size(); ++i)
        if (roles[i].rfind(prefix, 0) == 0) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

// numeric fields after the role tag, e.g. "solution:1:4" -> {1, 4}
std::vector<int> role_fields(const std::string& role) {
    std::vector<int> out;
    size_t i = role.find(':');
    while (i != std::string::npos) {
        size_t j = role.find(':', i + 1);
        out.push_back(std::stoi(role.substr(i + 1, j == std::string::npos ? j : j - i - 1)));
        i = j;
    }
    return out;
}

std::vector<int> identity(int size) {
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

Ballot interval_ballot(int lo, int hi) {
    Ballot b;
    for (int c = lo; c <= hi; ++c) b.push_back(c);
    return b;
}

}  // namespace

// ---------------------------------------------------------------------------
// RX3C -> $DelApprovals, CI axis  s_1..s_3n  dummies  x_1..x_3n  p.
// Solution voter v(s_j, x_d) approves the whole stretch [s_j, x_d]; its two
// endpoint ("exterior") approvals cost 1 to delete, everything between is
// free, and fixed voters pin the scores of set, dummy and preferred
// candidates with undeletable approvals.
// ---------------------------------------------------------------------------

namespace {

struct DelCiLayout {
    int n;
    int set_at(int j) const { return j; }
    int dummy_at(int i) const { return 3 * n + i; }
    int universe_at(int i) const { return 5 * n + i; }
    int p() const { return 8 * n; }
    int m() const { return 8 * n + 1; }
};

}  // namespace

ReductionBundle reduce_rx3c_to_del_ci(const Rx3cInstance& src) {
    src.check_valid();
    const DelCiLayout lay{src.n};
    const int n = src.n;

    ReductionBundle bundle;
    Election& e = bundle.instance.election;
    e.num_candidates = lay.m();
    bundle.candidate_roles.resize(lay.m());
    bundle.candidate_names.resize(lay.m());
    for (int j = 0; j < 3 * n; ++j) {
        bundle.candidate_roles[lay.set_at(j)] = "set:" + std::to_string(j);
        bundle.candidate_names[lay.set_at(j)] = "s" + std::to_string(j + 1);
    }
    for (int i = 0; i < 2 * n; ++i) {
        bundle.candidate_roles[lay.dummy_at(i)] = "dummy:" + std::to_string(i);
        bundle.candidate_names[lay.dummy_at(i)] = "d" + std::to_string(i + 1);
    }
    for (int i = 0; i < 3 * n; ++i) {
        bundle.candidate_roles[lay.universe_at(i)] = "universe:" + std::to_string(i);
        bundle.candidate_names[lay.universe_at(i)] = "x" + std::to_string(i + 1);
    }
    bundle.candidate_roles[lay.p()] = "preferred";
    bundle.candidate_names[lay.p()] = "p";

    CostModel costs = CostModel::forbidden_by_default(OperationMode::Delete);

    auto add_fixed_pair = [&](int candidate) {
        for (int copy = 0; copy < 2; ++copy) {
            int v = e.num_voters();
            e.ballots.push_back({candidate});
            bundle.voter_roles.push_back("fixed:" + std::to_string(candidate) + ":" +
                                         std::to_string(copy));
            bundle.voter_names.push_back("f_" + bundle.candidate_names[candidate] + "_" +
                                         std::to_string(copy + 1));
            costs.set_delete(v, candidate, std::nullopt);
        }
    };
    for (int j = 0; j < 3 * n; ++j) add_fixed_pair(lay.set_at(j));
    for (int i = 0; i < 2 * n; ++i) add_fixed_pair(lay.dummy_at(i));
    add_fixed_pair(lay.p());

    for (int j = 0; j < 3 * n; ++j)
        for (int d : src.sets[j]) {
            int v = e.num_voters();
            int lo = lay.set_at(j), hi = lay.universe_at(d);
            e.ballots.push_back(interval_ballot(lo, hi));
            bundle.voter_roles.push_back("solution:" + std::to_string(j) + ":" + std::to_string(d));
            bundle.voter_names.push_back("v_s" + std::to_string(j + 1) + "_x" + std::to_string(d + 1));
            costs.set_delete(v, lo, 1);
            costs.set_delete(v, hi, 1);
            for (int c = lo + 1; c < hi; ++c) costs.set_delete(v, c, 0);
        }

    bundle.instance.witness = DomainWitness::ci(identity(lay.m()));
    bundle.instance.committee_size = n + 1;
    bundle.instance.preferred = lay.p();
    bundle.instance.budget = 9LL * n;
    bundle.instance.costs = std::move(costs);
    bundle.instance.check_valid();
    return bundle;
}

static void require_exact_cover(int n, const std::vector<std::array<int, 3>>& sets,
                                const std::vector<int>& cover) {
    if (static_cast<int>(cover.size()) != n) throw input_error("cover must contain exactly n sets");
    std::vector<char> hit(3 * n, 0);
    for (int j : cover) {
        if (j < 0 || j >= static_cast<int>(sets.size())) throw input_error("cover set out of range");
        for (int e : sets[j]) {
            if (hit[e]) throw input_error("cover is not exact: element covered twice");
            hit[e] = 1;
        }
    }
    for (int e = 0; e < 3 * n; ++e)
        if (!hit[e]) throw input_error("cover is not exact: element " + std::to_string(e) + " missed");
}

namespace {

// reads the source sets back from the solution-voter roles
std::vector<std::array<int, 3>> delci_source_sets(const ReductionBundle& bundle, int n) {
    std::vector<std::vector<int>> elems(3 * n);
    for (const std::string& role : bundle.voter_roles)
        if (role.rfind("solution:", 0) == 0) {
            std::vector<int> f = role_fields(role);
            elems[f[0]].push_back(f[1]);
        }
    std::vector<std::array<int, 3>> sets(3 * n);
    for (int j = 0; j < 3 * n; ++j) {
        std::sort(elems[j].begin(), elems[j].end());
        sets[j] = {elems[j][0], elems[j][1], elems[j][2]};
    }
    return sets;
}

int delci_universe_n(const ReductionBundle& bundle) {
    return (bundle.instance.election.num_candidates - 1) / 8;
}

}  // namespace

BriberyPlan build_plan_from_cover_del_ci(const ReductionBundle& bundle, const std::vector<int>& cover) {
    const int n = delci_universe_n(bundle);
    const DelCiLayout lay{n};
    require_exact_cover(n, delci_source_sets(bundle, n), cover);
    std::set<int> in_cover(cover.begin(), cover.end());

    BriberyPlan plan;
    for (int v = 0; v < bundle.instance.election.num_voters(); ++v) {
        const std::string& role = bundle.voter_roles[v];
        if (role.rfind("solution:", 0) != 0) continue;
        std::vector<int> f = role_fields(role);
        int lo = lay.set_at(f[0]), hi = lay.universe_at(f[1]);
        for (int c = lo + 1; c < hi; ++c) plan.ops.push_back(UnitOperation::del(v, c));
        plan.ops.push_back(UnitOperation::del(v, in_cover.count(f[0]) ? hi : lo));
    }
    canonicalize(plan);
    Cost total = plan_cost(plan, bundle.instance.costs);
    plan.total_cost = *total;
    return plan;
}

std::vector<int> extract_cover_del_ci(const ReductionBundle& bundle, const BriberyPlan& plan) {
    VerificationReport report = verify_solution(bundle.instance, plan);
    if (!report.valid()) throw input_error("extract_cover_del_ci: plan does not verify: " + report.detail);

    const int n = delci_universe_n(bundle);
    const DelCiLayout lay{n};
    Election after = apply_plan(bundle.instance.election, plan);
    std::set<int> cover_set;
    for (int v = 0; v < after.num_voters(); ++v) {
        const std::string& role = bundle.voter_roles[v];
        if (role.rfind("solution:", 0) != 0) continue;
        int j = role_fields(role)[0];
        if (ballot_contains(after.ballots[v], lay.set_at(j))) cover_set.insert(j);
    }
    std::vector<int> cover(cover_set.begin(), cover_set.end());
    require_exact_cover(n, delci_source_sets(bundle, n), cover);  // guaranteed by the backward direction
    return cover;
}

// ---------------------------------------------------------------------------
// Cubic Independent Set -> SwapApprovals (unit prices), CI axis of filler
// blocks separating vertex candidates, a dummy block, then p.
// ---------------------------------------------------------------------------

namespace {

struct SwapCiLayout {
    int n, t;
    int vertex_at(int i) const { return i * (t + 1) + t; }
    int group_start(int g) const { return g * (t + 1); }
    int dummy_start() const { return n * (t + 1) + t; }
    int p() const { return n * (t + 1) + 2 * t; }
    int m() const { return t * (n + 2) + n + 1; }
};

}  // namespace

ReductionBundle reduce_cubic_is_to_swap_ci(const CubicGraph& graph, int h) {
    graph.check_valid();
    const int n = graph.num_vertices;
    if (h < 0 || h > n) throw input_error("independent set size out of range");
    const Money budget = 3LL * h;
    const int t = static_cast<int>(budget) + 1;
    const int L = static_cast<int>(graph.edges.size());  // 3n/2
    const SwapCiLayout lay{n, t};

    ReductionBundle bundle;
    Election& e = bundle.instance.election;
    e.num_candidates = lay.m();
    bundle.candidate_roles.assign(lay.m(), "");
    bundle.candidate_names.assign(lay.m(), "");
    for (int g = 0; g <= n; ++g)
        for (int i = 0; i < t; ++i) {
            int c = lay.group_start(g) + i;
            bundle.candidate_roles[c] = "filler:" + std::to_string(g) + ":" + std::to_string(i);
            bundle.candidate_names[c] = "f" + std::to_string(g) + "_" + std::to_string(i + 1);
        }
    for (int i = 0; i < n; ++i) {
        bundle.candidate_roles[lay.vertex_at(i)] = "vertex:" + std::to_string(i);
        bundle.candidate_names[lay.vertex_at(i)] = "c" + std::to_string(i + 1);
    }
    for (int i = 0; i < t; ++i) {
        bundle.candidate_roles[lay.dummy_start() + i] = "dummy:" + std::to_string(i);
        bundle.candidate_names[lay.dummy_start() + i] = "d" + std::to_string(i + 1);
    }
    bundle.candidate_roles[lay.p()] = "preferred";
    bundle.candidate_names[lay.p()] = "p";

    // an edge ballot covers every vertex candidate between its endpoints,
    // so the padding tops each vertex up from its covering-edge count to L
    std::vector<int> covered(n, 0);
    for (auto [a, b] : graph.edges) {
        e.ballots.push_back(interval_ballot(lay.vertex_at(a), lay.vertex_at(b)));
        bundle.voter_roles.push_back("edge:" + std::to_string(a) + ":" + std::to_string(b));
        bundle.voter_names.push_back("e" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
        for (int i = a; i <= b; ++i) ++covered[i];
    }
    for (int i = 0; i < n; ++i)
        for (int copy = 0; copy < L - covered[i]; ++copy) {
            e.ballots.push_back(interval_ballot(lay.vertex_at(i) - t, lay.vertex_at(i) + t));
            bundle.voter_roles.push_back("pad:" + std::to_string(i) + ":" + std::to_string(copy));
            bundle.voter_names.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(copy + 1));
        }
    for (int copy = 0; copy < L - 3; ++copy) {
        e.ballots.push_back({lay.p()});
        bundle.voter_roles.push_back("p:" + std::to_string(copy));
        bundle.voter_names.push_back("pv" + std::to_string(copy + 1));
    }
    for (int g = 0; g <= n; ++g)
        for (int copy = 0; copy < L + 4 * t; ++copy) {
            e.ballots.push_back(interval_ballot(lay.group_start(g), lay.group_start(g) + t - 1));
            bundle.voter_roles.push_back("filler_voter:" + std::to_string(g) + ":" +
                                         std::to_string(copy));
            bundle.voter_names.push_back("g" + std::to_string(g) + "_" + std::to_string(copy + 1));
        }

    bundle.instance.witness = DomainWitness::ci(identity(lay.m()));
    bundle.instance.committee_size = t * (n + 1) + (n - h) + 1;
    bundle.instance.preferred = lay.p();
    bundle.instance.budget = budget;
    bundle.instance.costs = CostModel::unit(OperationMode::Swap);
    bundle.instance.check_valid();
    return bundle;
}

namespace {

std::vector<std::pair<int, int>> swapci_edges(const ReductionBundle& bundle) {
    std::vector<std::pair<int, int>> edges;
    for (const std::string& role : bundle.voter_roles)
        if (role.rfind("edge:", 0) == 0) {
            std::vector<int> f = role_fields(role);
            edges.push_back({f[0], f[1]});
        }
    return edges;
}

}  // namespace

BriberyPlan build_plan_from_independent_set(const ReductionBundle& bundle,
                                            const std::vector<int>& vertices) {
    const int n = static_cast<int>(find_roles_with_prefix(bundle.candidate_roles, "vertex:").size());
    const int t = static_cast<int>(bundle.instance.budget) + 1;
    const SwapCiLayout lay{n, t};
    const std::vector<std::pair<int, int>> edges = swapci_edges(bundle);

    std::set<int> chosen(vertices.begin(), vertices.end());
    if (static_cast<int>(chosen.size()) != static_cast<int>(vertices.size()))
        throw input_error("independent set contains duplicates");
    if (3LL * static_cast<int>(chosen.size()) != bundle.instance.budget)
        throw input_error("expected an independent set of size h");
    for (auto [a, b] : edges)
        if (chosen.count(a) && chosen.count(b))
            throw input_error("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                              " are adjacent");

    BriberyPlan plan;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        int voter = find_role(bundle.voter_roles, "edge:" + std::to_string(a) + ":" + std::to_string(b));
        // move the approval of the chosen endpoint to the filler just
        // beyond the other endpoint, shifting the ballot by one position
        if (chosen.count(a))
            plan.ops.push_back(UnitOperation::swap(voter, lay.vertex_at(a), lay.vertex_at(b) + 1));
        else if (chosen.count(b))
            plan.ops.push_back(UnitOperation::swap(voter, lay.vertex_at(b), lay.vertex_at(a) - 1));
    }
    canonicalize(plan);
    plan.total_cost = *plan_cost(plan, bundle.instance.costs);
    return plan;
}

std::vector<int> extract_is_swap_ci(const ReductionBundle& bundle, const BriberyPlan& plan) {
    VerificationReport report = verify_solution(bundle.instance, plan);
    if (!report.valid()) throw input_error("extract_is_swap_ci: plan does not verify: " + report.detail);

    const int n = static_cast<int>(find_roles_with_prefix(bundle.candidate_roles, "vertex:").size());
    const int t = static_cast<int>(bundle.instance.budget) + 1;
    const SwapCiLayout lay{n, t};
    Election after = apply_plan(bundle.instance.election, plan);
    std::vector<int> scores = approval_scores(after);
    const int L = approval_scores(bundle.instance.election)[lay.vertex_at(0)];

    std::vector<int> chosen;
    for (int i = 0; i < n; ++i)
        if (scores[lay.vertex_at(i)] == L - 3) chosen.push_back(i);
    for (auto [a, b] : swapci_edges(bundle))
        if (std::binary_search(chosen.begin(), chosen.end(), a) &&
            std::binary_search(chosen.begin(), chosen.end(), b))
            throw input_error("extract_is_swap_ci: demoted vertices are adjacent");
    return chosen;
}

// ---------------------------------------------------------------------------
// RX3C -> $SwapApprovals, single winner, VI order v_0 .. v_10n. Every
// universe candidate must hand its first approval to the S' candidate of a
// covering set; non-cover S'' columns retreat from the bottom at unit cost,
// cover S'' columns retreat from the top for free.
// ---------------------------------------------------------------------------

namespace {

struct SwapViLayout {
    int n;
    int p() const { return 0; }
    int universe_at(int i) const { return 1 + i; }
    int sprime_at(int t) const { return 1 + 3 * n + 5 * t; }
    int sdouble_at(int t) const { return 1 + 3 * n + 5 * t + 1; }
    int content_at(int t, int rank) const { return 1 + 3 * n + 5 * t + 2 + rank; }
    int m() const { return 1 + 3 * n + 5 * (3 * n); }
    int num_voters() const { return 10 * n + 1; }
    int big_p() const { return 7 * n - 1; }
};

}  // namespace

ReductionBundle reduce_rx3c_to_swap_vi(const Rx3cInstance& src) {
    src.check_valid();
    const int n = src.n;
    const SwapViLayout lay{n};
    const int P = lay.big_p();

    ReductionBundle bundle;
    Election& e = bundle.instance.election;
    e.num_candidates = lay.m();
    e.ballots.assign(lay.num_voters(), {});
    bundle.candidate_roles.assign(lay.m(), "");
    bundle.candidate_names.assign(lay.m(), "");
    bundle.candidate_roles[lay.p()] = "preferred";
    bundle.candidate_names[lay.p()] = "p";
    for (int i = 0; i < 3 * n; ++i) {
        bundle.candidate_roles[lay.universe_at(i)] = "universe:" + std::to_string(i);
        bundle.candidate_names[lay.universe_at(i)] = "x" + std::to_string(i + 1);
    }
    for (int t = 0; t < 3 * n; ++t) {
        bundle.candidate_roles[lay.sprime_at(t)] = "sprime:" + std::to_string(t);
        bundle.candidate_names[lay.sprime_at(t)] = "Sp_" + std::to_string(t + 1);
        bundle.candidate_roles[lay.sdouble_at(t)] = "sdouble:" + std::to_string(t);
        bundle.candidate_names[lay.sdouble_at(t)] = "Spp_" + std::to_string(t + 1);
        for (int r = 0; r < 3; ++r) {
            int elem = src.sets[t][r];
            bundle.candidate_roles[lay.content_at(t, r)] =
                "content:" + std::to_string(t) + ":" + std::to_string(elem);
            bundle.candidate_names[lay.content_at(t, r)] =
                "y_" + std::to_string(t + 1) + "_" + std::to_string(elem + 1);
        }
    }
    for (int v = 0; v < lay.num_voters(); ++v) {
        bundle.voter_roles.push_back("chain:" + std::to_string(v));
        bundle.voter_names.push_back("v" + std::to_string(v));
    }

    // approvals: p by v_1..v_P; x_i by v_i..v_{i+P}; S''_t by everyone
    for (int v = 1; v <= P; ++v) e.ballots[v].push_back(lay.p());
    for (int i = 0; i < 3 * n; ++i)
        for (int v = i + 1; v <= i + 1 + P; ++v) e.ballots[v].push_back(lay.universe_at(i));
    for (int t = 0; t < 3 * n; ++t)
        for (int v = 0; v < lay.num_voters(); ++v) e.ballots[v].push_back(lay.sdouble_at(t));
    for (Ballot& b : e.ballots) std::sort(b.begin(), b.end());

    CostModel costs = CostModel::forbidden_by_default(OperationMode::Swap);
    // moves touching p are forbidden explicitly, not via the default
    for (int v = 0; v < lay.num_voters(); ++v)
        for (int c = 1; c < lay.m(); ++c) {
            costs.set_swap(v, lay.p(), c, std::nullopt);
            costs.set_swap(v, c, lay.p(), std::nullopt);
        }
    for (int t = 0; t < 3 * n; ++t) {
        int sp = lay.sprime_at(t), sd = lay.sdouble_at(t);
        for (int r = 0; r < 3; ++r) {
            int elem = src.sets[t][r];
            costs.set_swap(elem + 1, lay.universe_at(elem), sp, 0);  // x_i -> S'_t by voter v_i
            costs.set_swap(elem + 1, sd, lay.content_at(t, r), 0);   // S''_t -> y_{t,i} by voter v_i
        }
        costs.set_swap(0, sd, sp, 0);
        costs.set_swap(3 * n + 1, sd, sp, 0);
        for (int i = 1; i <= 3 * n; ++i)
            if (std::find(src.sets[t].begin(), src.sets[t].end(), i - 1) == src.sets[t].end())
                costs.set_swap(i, sd, sp, 0);  // element i-1 outside S_t
        costs.set_swap(10 * n, sd, sp, 1);
        for (int v = P; v <= 10 * n - 1; ++v) costs.set_swap(v, sd, sp, 0);
    }

    bundle.instance.witness = DomainWitness::vi(identity(lay.num_voters()));
    bundle.instance.committee_size = 1;
    bundle.instance.preferred = lay.p();
    bundle.instance.budget = 2LL * n;
    bundle.instance.costs = std::move(costs);
    bundle.instance.check_valid();
    return bundle;
}

BriberyPlan build_plan_from_cover_swap_vi(const ReductionBundle& bundle, const std::vector<int>& cover) {
    const int n = (bundle.instance.election.num_voters() - 1) / 10;
    const SwapViLayout lay{n};
    const int P = lay.big_p();

    // recover the source sets from the content-candidate roles
    std::vector<std::vector<int>> elems(3 * n);
    for (int c = 0; c < lay.m(); ++c) {
        const std::string& role = bundle.candidate_roles[c];
        if (role.rfind("content:", 0) == 0) {
            std::vector<int> f = role_fields(role);
            elems[f[0]].push_back(f[1]);
        }
    }
    std::vector<std::array<int, 3>> sets(3 * n);
    for (int t = 0; t < 3 * n; ++t) {
        std::sort(elems[t].begin(), elems[t].end());
        sets[t] = {elems[t][0], elems[t][1], elems[t][2]};
    }
    require_exact_cover(n, sets, cover);
    std::set<int> in_cover(cover.begin(), cover.end());

    BriberyPlan plan;
    for (int t = 0; t < 3 * n; ++t) {
        int sp = lay.sprime_at(t), sd = lay.sdouble_at(t);
        if (!in_cover.count(t)) {
            for (int v = P; v <= 10 * n; ++v) plan.ops.push_back(UnitOperation::swap(v, sd, sp));
            continue;
        }
        std::set<int> member_voters;
        for (int r = 0; r < 3; ++r) {
            int elem = sets[t][r];
            member_voters.insert(elem + 1);
            plan.ops.push_back(UnitOperation::swap(elem + 1, lay.universe_at(elem), sp));
            plan.ops.push_back(UnitOperation::swap(elem + 1, sd, lay.content_at(t, r)));
        }
        for (int v = 0; v <= 3 * n + 1; ++v)
            if (!member_voters.count(v)) plan.ops.push_back(UnitOperation::swap(v, sd, sp));
    }
    canonicalize(plan);
    plan.total_cost = *plan_cost(plan, bundle.instance.costs);
    return plan;
}

// ---------------------------------------------------------------------------
// Generators.
// ---------------------------------------------------------------------------

Rx3cInstance gen_rx3c(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_rx3c: n must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        for (int e = 0; e < 3 * n; ++e)
            for (int copy = 0; copy < 3; ++copy) stubs.push_back(e);
        rng.shuffle(stubs);
        Rx3cInstance inst;
        inst.n = n;
        bool ok = true;
        for (int j = 0; j < 3 * n && ok; ++j) {
            std::array<int, 3> s = {stubs[3 * j], stubs[3 * j + 1], stubs[3 * j + 2]};
            std::sort(s.begin(), s.end());
            if (s[0] == s[1] || s[1] == s[2]) ok = false;
            inst.sets.push_back(s);
        }
        if (!ok) continue;
        inst.check_valid();
        return inst;
    }
    throw input_error("gen_rx3c: could not draw a valid instance");
}

CubicGraph gen_cubic_graph(int num_vertices, std::uint64_t seed) {
    if (num_vertices < 4 || num_vertices % 2 != 0)
        throw input_error("gen_cubic_graph: vertex count must be even and >= 4");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < num_vertices; ++v)
            for (int copy = 0; copy < 3; ++copy) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (size_t i = 0; i < stubs.size() && ok; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) ok = false;
            else ok = edges.insert({std::min(a, b), std::max(a, b)}).second;
        }
        if (!ok) continue;
        CubicGraph g;
        g.num_vertices = num_vertices;
        g.edges.assign(edges.begin(), edges.end());
        g.check_valid();
        return g;
    }
    throw input_error("gen_cubic_graph: could not draw a valid graph");
}

std::pair<Election, DomainWitness> gen_random_election(int num_candidates, int num_voters,
                                                       double density, DomainKind domain,
                                                       std::uint64_t seed) {
    if (num_candidates < 1 || num_voters < 1) throw input_error("gen_random_election: empty election");
    if (!(density > 0.0 && density <= 1.0)) throw input_error("gen_random_election: density in (0,1]");
    Rng rng(seed);
    Election e;
    e.num_candidates = num_candidates;
    e.ballots.assign(num_voters, {});

    switch (domain) {
        case DomainKind::CandidateInterval: {
            std::vector<int> axis = identity(num_candidates);
            rng.shuffle(axis);
            for (int v = 0; v < num_voters; ++v) {
                if (!rng.chance(density)) continue;
                int a = rng.range(0, num_candidates - 1);
                int b = rng.range(a, num_candidates - 1);
                for (int q = a; q <= b; ++q) e.ballots[v].push_back(axis[q]);
                std::sort(e.ballots[v].begin(), e.ballots[v].end());
            }
            return {e, DomainWitness::ci(axis)};
        }
        case DomainKind::VoterInterval: {
            std::vector<int> order = identity(num_voters);
            rng.shuffle(order);
            for (int c = 0; c < num_candidates; ++c) {
                if (!rng.chance(density)) continue;
                int a = rng.range(0, num_voters - 1);
                int b = rng.range(a, num_voters - 1);
                for (int q = a; q <= b; ++q) e.ballots[order[q]].push_back(c);
            }
            for (Ballot& b : e.ballots) std::sort(b.begin(), b.end());
            return {e, DomainWitness::vi(order)};
        }
        case DomainKind::Unrestricted: {
            for (int v = 0; v < num_voters; ++v)
                for (int c = 0; c < num_candidates; ++c)
                    if (rng.chance(density)) e.ballots[v].push_back(c);
            return {e, DomainWitness::unrestricted()};
        }
    }
    throw input_error("gen_random_election: unknown domain");
}

// ---------------------------------------------------------------------------
// Exhaustive source solvers.
// ---------------------------------------------------------------------------

namespace {

bool rx3c_search(const Rx3cInstance& src, size_t from, std::vector<char>& hit, int covered,
                 std::vector<int>& chosen) {
    if (covered == 3 * src.n) return static_cast<int>(chosen.size()) == src.n;
    if (static_cast<int>(chosen.size()) == src.n) return false;
    for (size_t j = from; j < src.sets.size(); ++j) {
        bool clash = false;
        for (int e : src.sets[j])
            if (hit[e]) clash = true;
        if (clash) continue;
        for (int e : src.sets[j]) hit[e] = 1;
        chosen.push_back(static_cast<int>(j));
        if (rx3c_search(src, j + 1, hit, covered + 3, chosen)) return true;
        chosen.pop_back();
        for (int e : src.sets[j]) hit[e] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_rx3c_exhaustive(const Rx3cInstance& src) {
    src.check_valid();
    std::vector<char> hit(3 * src.n, 0);
    std::vector<int> chosen;
    if (rx3c_search(src, 0, hit, 0, chosen)) return chosen;
    return std::nullopt;
}

std::optional<std::vector<int>> find_independent_set(const CubicGraph& graph, int size) {
    graph.check_valid();
    if (size == 0) return std::vector<int>{};
    std::vector<std::vector<char>> adjacent(graph.num_vertices,
                                            std::vector<char>(graph.num_vertices, 0));
    for (auto [a, b] : graph.edges) adjacent[a][b] = adjacent[b][a] = 1;
    std::vector<int> chosen;
    auto search = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == size) return true;
        for (int v = from; v < graph.num_vertices; ++v) {
            bool clash = false;
            for (int u : chosen)
                if (adjacent[u][v]) clash = true;
            if (clash) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(search, 0)) return chosen;
    return std::nullopt;
}

}  // namespace bribery
