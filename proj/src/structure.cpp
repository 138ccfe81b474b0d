#include "bribery/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace bribery {

namespace {

// first/last positions of a row's support and a contiguity check
ValidationResult validate_rows(int num_positions, const std::vector<std::vector<int>>& row_positions) {
    IntervalCertificate cert;
    cert.entries.resize(row_positions.size());
    for (size_t r = 0; r < row_positions.size(); ++r) {
        const std::vector<int>& ps = row_positions[r];
        if (ps.empty()) {
            cert.entries[r] = IntervalEntry{0, -1};
            continue;
        }
        int first = num_positions, last = -1;
        for (int p : ps) {
            first = std::min(first, p);
            last = std::max(last, p);
        }
        if (last - first + 1 != static_cast<int>(ps.size())) {
            std::vector<char> covered(num_positions, 0);
            for (int p : ps) covered[p] = 1;
            int gap = first;
            while (covered[gap]) ++gap;
            ValidationResult bad;
            bad.violation = IntervalViolation{static_cast<int>(r), gap};
            return bad;
        }
        cert.entries[r] = IntervalEntry{first, last};
    }
    ValidationResult ok;
    ok.certificate = std::move(cert);
    return ok;
}

}  // namespace

ValidationResult validate_ci(const Election& e, const std::vector<int>& axis) {
    std::vector<int> pos = inverse_permutation(axis, e.num_candidates);
    std::vector<std::vector<int>> row_positions(e.num_voters());
    for (int v = 0; v < e.num_voters(); ++v)
        for (int c : e.ballots[v]) row_positions[v].push_back(pos[c]);
    return validate_rows(e.num_candidates, row_positions);
}

ValidationResult validate_vi(const Election& e, const std::vector<int>& voter_order) {
    std::vector<int> pos = inverse_permutation(voter_order, e.num_voters());
    std::vector<std::vector<int>> row_positions(e.num_candidates);
    for (int v = 0; v < e.num_voters(); ++v)
        for (int c : e.ballots[v]) row_positions[c].push_back(pos[v]);
    return validate_rows(e.num_voters(), row_positions);
}

bool witness_holds(const Election& e, const DomainWitness& witness) {
    switch (witness.kind) {
        case DomainKind::Unrestricted: return true;
        case DomainKind::CandidateInterval: return validate_ci(e, witness.order).ok();
        case DomainKind::VoterInterval: return validate_vi(e, witness.order).ok();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Consecutive ones via strict-overlap components.
//
// Rows that strictly overlap (intersect without containment) force each
// other's relative placement up to reflection; the placement of a whole
// component is found by BFS attachment with pairwise intersection checks.
// Distinct components have disjoint or nested column spans, and a nested
// span always sits inside a single signature class of its parent, so the
// components assemble into a forest. Every produced order is re-validated
// before being returned.
// ---------------------------------------------------------------------------

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

int overlap_length(int lo1, int hi1, int lo2, int hi2) {
    return std::max(0, std::min(hi1, hi2) - std::max(lo1, lo2) + 1);
}

struct Component {
    std::vector<int> row_ids;          // indices into the global row list
    std::vector<int> span;             // sorted union of the rows' columns
    std::vector<int> class_of_column;  // per span column: class id
    std::vector<int> class_order;      // class ids in placement (left-to-right) order
    std::vector<std::vector<int>> class_columns;  // per class: sorted columns
};

struct Forest {
    std::vector<Component> comps;
    // children[comp][class] -> child component ids (disjoint spans)
    std::vector<std::map<int, std::vector<int>>> children;
    std::vector<int> roots;
    std::vector<int> free_columns;
};

// Places one strict-overlap component on an abstract line and derives its
// signature classes. Returns false when no placement exists.
bool place_component(const std::vector<std::vector<int>>& rows, const std::vector<int>& member_ids,
                     const std::vector<std::vector<int>>& adjacency, Component& out) {
    const int k = static_cast<int>(member_ids.size());
    std::map<int, int> local;  // row id -> local index
    for (int i = 0; i < k; ++i) local[member_ids[i]] = i;

    std::vector<int> lo(k), hi(k);
    std::vector<char> placed(k, 0);
    std::vector<int> placed_order;

    const std::vector<int>& root_row = rows[member_ids[0]];
    lo[0] = 0;
    hi[0] = static_cast<int>(root_row.size()) - 1;
    placed[0] = 1;
    placed_order.push_back(0);

    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int nb_global : adjacency[member_ids[u]]) {
            int v = local.at(nb_global);
            if (placed[v]) continue;
            const std::vector<int>& rv = rows[member_ids[v]];
            int len = static_cast<int>(rv.size());
            int shared = intersection_size(rows[member_ids[u]], rv);
            // attach to the right or to the left of u
            int lo_right = hi[u] - shared + 1;
            int lo_left = lo[u] + shared - len;
            bool right_ok = true, left_ok = true;
            for (int w : placed_order) {
                int need = intersection_size(rows[member_ids[w]], rv);
                if (overlap_length(lo_right, lo_right + len - 1, lo[w], hi[w]) != need) right_ok = false;
                if (overlap_length(lo_left, lo_left + len - 1, lo[w], hi[w]) != need) left_ok = false;
                if (!right_ok && !left_ok) break;
            }
            if (!right_ok && !left_ok) return false;
            lo[v] = right_ok ? lo_right : lo_left;
            hi[v] = lo[v] + len - 1;
            placed[v] = 1;
            placed_order.push_back(v);
            bfs.push(v);
        }
    }

    int base = *std::min_element(lo.begin(), lo.end());
    int top = *std::max_element(hi.begin(), hi.end());
    int width = top - base + 1;

    // span columns and their signatures (set of local rows containing them)
    std::set<int> span_set;
    for (int id : member_ids)
        for (int c : rows[id]) span_set.insert(c);
    out.span.assign(span_set.begin(), span_set.end());
    if (static_cast<int>(out.span.size()) != width) return false;

    std::map<std::vector<int>, int> class_ids;
    std::vector<int> column_class;
    column_class.reserve(out.span.size());
    for (int c : out.span) {
        std::vector<int> sig;
        for (int i = 0; i < k; ++i)
            if (std::binary_search(rows[member_ids[i]].begin(), rows[member_ids[i]].end(), c))
                sig.push_back(i);
        auto [it, fresh] = class_ids.try_emplace(sig, static_cast<int>(class_ids.size()));
        column_class.push_back(it->second);
        (void)fresh;
    }

    // position signatures must match column signatures class by class, and
    // each class must occupy a contiguous run of positions
    int num_classes = static_cast<int>(class_ids.size());
    std::vector<int> pos_class(width, -1);
    for (int p = 0; p < width; ++p) {
        std::vector<int> sig;
        for (int i = 0; i < k; ++i)
            if (lo[i] - base <= p && p <= hi[i] - base) sig.push_back(i);
        auto it = class_ids.find(sig);
        if (it == class_ids.end()) return false;
        pos_class[p] = it->second;
    }
    std::vector<int> col_count(num_classes, 0), pos_count(num_classes, 0);
    for (int cl : column_class) ++col_count[cl];
    for (int cl : pos_class) ++pos_count[cl];
    if (col_count != pos_count) return false;

    out.class_order.clear();
    for (int p = 0; p < width; ++p)
        if (p == 0 || pos_class[p] != pos_class[p - 1]) {
            if (std::count(out.class_order.begin(), out.class_order.end(), pos_class[p]) > 0)
                return false;  // class split across two runs: no realization
            out.class_order.push_back(pos_class[p]);
        }

    out.class_columns.assign(num_classes, {});
    for (size_t i = 0; i < out.span.size(); ++i) out.class_columns[column_class[i]].push_back(out.span[i]);
    out.class_of_column = std::move(column_class);
    out.row_ids = member_ids;
    return true;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return static_cast<int>(a.size()) == intersection_size(a, b);
}

void realize(const Forest& forest, int comp_id, std::vector<int>& out) {
    const Component& comp = forest.comps[comp_id];
    const std::map<int, std::vector<int>>& kids = forest.children[comp_id];
    for (int cl : comp.class_order) {
        std::set<int> taken;
        auto it = kids.find(cl);
        if (it != kids.end()) {
            for (int child : it->second) {
                realize(forest, child, out);
                for (int c : forest.comps[child].span) taken.insert(c);
            }
        }
        for (int c : comp.class_columns[cl])
            if (!taken.count(c)) out.push_back(c);
    }
}

}  // namespace

std::optional<std::vector<int>> consecutive_ones_order(int num_columns,
                                                       const std::vector<std::vector<int>>& input_rows) {
    // constraint rows: nonempty, not full, not singletons, deduplicated
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> rows;
    for (const std::vector<int>& r : input_rows) {
        if (r.size() <= 1 || static_cast<int>(r.size()) >= num_columns) continue;
        if (seen.insert(r).second) rows.push_back(r);
    }
    const int nrows = static_cast<int>(rows.size());

    std::vector<std::vector<int>> adjacency(nrows);
    for (int i = 0; i < nrows; ++i)
        for (int j = i + 1; j < nrows; ++j) {
            int shared = intersection_size(rows[i], rows[j]);
            if (shared > 0 && shared < static_cast<int>(rows[i].size()) &&
                shared < static_cast<int>(rows[j].size())) {
                adjacency[i].push_back(j);
                adjacency[j].push_back(i);
            }
        }

    // strict-overlap components, in row order
    std::vector<int> comp_of(nrows, -1);
    std::vector<std::vector<int>> members;
    for (int i = 0; i < nrows; ++i) {
        if (comp_of[i] != -1) continue;
        int id = static_cast<int>(members.size());
        members.push_back({});
        std::queue<int> q;
        q.push(i);
        comp_of[i] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members[id].push_back(u);
            for (int v : adjacency[u])
                if (comp_of[v] == -1) {
                    comp_of[v] = id;
                    q.push(v);
                }
        }
        std::sort(members[id].begin(), members[id].end());
    }

    Forest forest;
    for (const std::vector<int>& ms : members) {
        Component comp;
        if (!place_component(rows, ms, adjacency, comp)) return std::nullopt;
        forest.comps.push_back(std::move(comp));
    }

    // nesting forest: parent = smallest strict superset span. A component
    // whose span equals another's is redundant only when it carries no
    // internal structure (a single containment-maximal row).
    int ncomp = static_cast<int>(forest.comps.size());
    std::vector<int> order_by_size(ncomp);
    std::iota(order_by_size.begin(), order_by_size.end(), 0);
    std::sort(order_by_size.begin(), order_by_size.end(), [&](int a, int b) {
        if (forest.comps[a].span.size() != forest.comps[b].span.size())
            return forest.comps[a].span.size() > forest.comps[b].span.size();
        return forest.comps[a].span < forest.comps[b].span;
    });

    forest.children.assign(ncomp, {});
    std::vector<char> dropped(ncomp, 0);
    std::vector<int> parent(ncomp, -1);
    for (size_t oi = 0; oi < order_by_size.size(); ++oi) {
        int x = order_by_size[oi];
        int best = -1;
        for (size_t oj = 0; oj < oi; ++oj) {
            int y = order_by_size[oj];
            if (dropped[y]) continue;
            if (forest.comps[y].span.size() == forest.comps[x].span.size()) {
                if (forest.comps[y].span == forest.comps[x].span) {
                    // equal spans: at most one side can be nontrivial
                    if (forest.comps[x].class_order.size() <= 1) { dropped[x] = 1; break; }
                    if (forest.comps[y].class_order.size() <= 1) { dropped[y] = 1; continue; }
                    return std::nullopt;
                }
                continue;
            }
            if (!is_subset(forest.comps[x].span, forest.comps[y].span)) continue;
            if (best == -1 || forest.comps[y].span.size() < forest.comps[best].span.size()) best = y;
        }
        if (dropped[x]) continue;
        parent[x] = best;
    }
    for (int x = 0; x < ncomp; ++x) {
        if (dropped[x]) continue;
        if (parent[x] == -1) {
            forest.roots.push_back(x);
            continue;
        }
        // locate the parent class hosting this span
        const Component& par = forest.comps[parent[x]];
        int col0 = forest.comps[x].span.front();
        auto it = std::lower_bound(par.span.begin(), par.span.end(), col0);
        int cl = par.class_of_column[it - par.span.begin()];
        if (!is_subset(forest.comps[x].span, par.class_columns[cl])) return std::nullopt;
        forest.children[parent[x]][cl].push_back(x);
    }
    std::sort(forest.roots.begin(), forest.roots.end(), [&](int a, int b) {
        return forest.comps[a].span.front() < forest.comps[b].span.front();
    });
    for (auto& by_class : forest.children)
        for (auto& [cl, kids] : by_class)
            std::sort(kids.begin(), kids.end(),
                      [&](int a, int b) { return forest.comps[a].span.front() < forest.comps[b].span.front(); });

    std::vector<char> in_some_span(num_columns, 0);
    for (int x = 0; x < ncomp; ++x) {
        if (dropped[x]) continue;
        if (parent[x] == -1)
            for (int c : forest.comps[x].span) in_some_span[c] = 1;
    }

    std::vector<int> order;
    for (int root : forest.roots) realize(forest, root, order);
    for (int c = 0; c < num_columns; ++c)
        if (!in_some_span[c]) order.push_back(c);
    if (static_cast<int>(order.size()) != num_columns) return std::nullopt;

    // self-check against every input row
    std::vector<int> pos(num_columns);
    for (int p = 0; p < num_columns; ++p) pos[order[p]] = p;
    for (const std::vector<int>& r : input_rows) {
        if (r.empty()) continue;
        int first = num_columns, last = -1;
        for (int c : r) {
            first = std::min(first, pos[c]);
            last = std::max(last, pos[c]);
        }
        if (last - first + 1 != static_cast<int>(r.size())) return std::nullopt;
    }
    return order;
}

std::optional<std::vector<int>> recognize_ci(const Election& e) {
    return consecutive_ones_order(e.num_candidates, e.ballots);
}

std::optional<std::vector<int>> recognize_vi(const Election& e) {
    std::vector<std::vector<int>> columns(e.num_voters());
    std::vector<std::vector<int>> approvers(e.num_candidates);
    for (int v = 0; v < e.num_voters(); ++v)
        for (int c : e.ballots[v]) approvers[c].push_back(v);
    return consecutive_ones_order(e.num_voters(), approvers);
}

namespace {

std::optional<std::vector<int>> brute_force_order(int num_columns,
                                                  const std::vector<std::vector<int>>& rows) {
    if (num_columns > brute_force_limit)
        throw input_error("brute-force recognizer limited to " + std::to_string(brute_force_limit) +
                          " items");
    std::vector<int> perm(num_columns);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> pos(num_columns);
        for (int p = 0; p < num_columns; ++p) pos[perm[p]] = p;
        bool ok = true;
        for (const std::vector<int>& r : rows) {
            if (r.empty()) continue;
            int first = num_columns, last = -1;
            for (int c : r) {
                first = std::min(first, pos[c]);
                last = std::max(last, pos[c]);
            }
            if (last - first + 1 != static_cast<int>(r.size())) {
                ok = false;
                break;
            }
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> recognize_ci_brute_force(const Election& e) {
    return brute_force_order(e.num_candidates, e.ballots);
}

std::optional<std::vector<int>> recognize_vi_brute_force(const Election& e) {
    std::vector<std::vector<int>> approvers(e.num_candidates);
    for (int v = 0; v < e.num_voters(); ++v)
        for (int c : e.ballots[v]) approvers[c].push_back(v);
    return brute_force_order(e.num_voters(), approvers);
}

}  // namespace bribery
