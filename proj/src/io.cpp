#include "bribery/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "bribery/structure.hpp"

namespace bribery {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw syntax_error(err.what());
    }
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw syntax_error(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string string_field(const json& doc, const char* key) {
    const json& f = field(doc, key);
    if (!f.is_string()) throw syntax_error(std::string("field \"") + key + "\" must be a string");
    return f.get<std::string>();
}

long long int_field(const json& doc, const char* key) {
    const json& f = field(doc, key);
    if (!f.is_number_integer()) throw syntax_error(std::string("field \"") + key + "\" must be an integer");
    return f.get<long long>();
}

Cost parse_cost(const json& value, const char* what) {
    if (value.is_string()) {
        if (value.get<std::string>() == "forbidden") return std::nullopt;
        throw syntax_error(std::string(what) + ": expected an integer or \"forbidden\"");
    }
    if (!value.is_number_integer())
        throw syntax_error(std::string(what) + ": expected an integer or \"forbidden\"");
    long long v = value.get<long long>();
    if (v < 0) throw input_error(std::string(what) + ": costs must be nonnegative");
    return v;
}

json cost_to_json(const Cost& c) {
    if (!c) return json("forbidden");
    return json(*c);
}

OperationMode parse_mode(const std::string& mode) {
    if (mode == "add") return OperationMode::Add;
    if (mode == "delete") return OperationMode::Delete;
    if (mode == "swap") return OperationMode::Swap;
    if (mode == "swap-to-p") return OperationMode::SwapToP;
    throw input_error("unknown mode \"" + mode + "\"");
}

std::string mode_name(OperationMode mode) {
    switch (mode) {
        case OperationMode::Add: return "add";
        case OperationMode::Delete: return "delete";
        case OperationMode::Swap: return "swap";
        case OperationMode::SwapToP: return "swap-to-p";
    }
    return "?";
}

DomainKind parse_kind(const std::string& kind) {
    if (kind == "ci") return DomainKind::CandidateInterval;
    if (kind == "vi") return DomainKind::VoterInterval;
    if (kind == "unrestricted") return DomainKind::Unrestricted;
    throw input_error("unknown witness kind \"" + kind + "\"");
}

std::string kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::CandidateInterval: return "ci";
        case DomainKind::VoterInterval: return "vi";
        case DomainKind::Unrestricted: return "unrestricted";
    }
    return "?";
}

std::map<std::string, int> index_names(const std::vector<std::string>& names, const char* what) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < names.size(); ++i)
        if (!index.try_emplace(names[i], static_cast<int>(i)).second)
            throw input_error(std::string("duplicate ") + what + " name \"" + names[i] + "\"");
    return index;
}

int lookup(const std::map<std::string, int>& index, const std::string& name, const char* what) {
    auto it = index.find(name);
    if (it == index.end())
        throw input_error(std::string("unknown ") + what + " name \"" + name + "\"");
    return it->second;
}

}  // namespace

int NamedInstance::candidate_index(const std::string& name) const {
    for (size_t i = 0; i < candidate_names.size(); ++i)
        if (candidate_names[i] == name) return static_cast<int>(i);
    throw input_error("unknown candidate name \"" + name + "\"");
}

int NamedInstance::voter_index(const std::string& name) const {
    for (size_t i = 0; i < voter_names.size(); ++i)
        if (voter_names[i] == name) return static_cast<int>(i);
    throw input_error("unknown voter name \"" + name + "\"");
}

namespace {

NamedElection parse_election_part(const json& doc) {
    NamedElection out;
    const json& cands = field(doc, "candidates");
    if (!cands.is_array() || cands.empty()) throw syntax_error("\"candidates\" must be a nonempty array");
    for (const json& c : cands) {
        if (!c.is_string()) throw syntax_error("candidate entries must be names");
        out.candidate_names.push_back(c.get<std::string>());
    }
    std::map<std::string, int> cidx = index_names(out.candidate_names, "candidate");

    const json& voters = field(doc, "voters");
    if (!voters.is_array() || voters.empty()) throw syntax_error("\"voters\" must be a nonempty array");
    out.election.num_candidates = static_cast<int>(out.candidate_names.size());
    for (const json& v : voters) {
        if (!v.is_object()) throw syntax_error("voter entries must be objects");
        out.voter_names.push_back(string_field(v, "name"));
        Ballot b;
        for (const json& a : field(v, "approves")) {
            if (!a.is_string()) throw syntax_error("approvals must be candidate names");
            b.push_back(lookup(cidx, a.get<std::string>(), "candidate"));
        }
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw input_error("voter \"" + out.voter_names.back() + "\" approves a candidate twice");
        out.election.ballots.push_back(std::move(b));
    }
    index_names(out.voter_names, "voter");
    out.election.check_valid();
    return out;
}

json election_to_json(const Election& e, const std::vector<std::string>& candidate_names,
                      const std::vector<std::string>& voter_names) {
    json doc;
    doc["candidates"] = candidate_names;
    json voters = json::array();
    for (int v = 0; v < e.num_voters(); ++v) {
        json entry;
        entry["name"] = voter_names[v];
        json approves = json::array();
        for (int c : e.ballots[v]) approves.push_back(candidate_names[c]);
        entry["approves"] = approves;
        voters.push_back(entry);
    }
    doc["voters"] = voters;
    return doc;
}

}  // namespace

NamedElection parse_election_document(const std::string& text) {
    return parse_election_part(parse_json(text));
}

NamedInstance parse_instance(const std::string& text) {
    json doc = parse_json(text);
    NamedElection base = parse_election_part(doc);
    NamedInstance out;
    out.instance.election = std::move(base.election);
    out.candidate_names = std::move(base.candidate_names);
    out.voter_names = std::move(base.voter_names);
    std::map<std::string, int> cidx = index_names(out.candidate_names, "candidate");
    std::map<std::string, int> vidx = index_names(out.voter_names, "voter");

    const json& witness = field(doc, "witness");
    DomainKind kind = parse_kind(string_field(witness, "kind"));
    if (kind == DomainKind::Unrestricted) {
        out.instance.witness = DomainWitness::unrestricted();
    } else {
        std::vector<int> order;
        const bool over_candidates = kind == DomainKind::CandidateInterval;
        for (const json& name : field(witness, "order")) {
            if (!name.is_string()) throw syntax_error("witness order entries must be names");
            order.push_back(over_candidates ? lookup(cidx, name.get<std::string>(), "candidate")
                                            : lookup(vidx, name.get<std::string>(), "voter"));
        }
        out.instance.witness = {kind, std::move(order)};
    }

    out.instance.committee_size = static_cast<int>(int_field(doc, "k"));
    out.instance.preferred = lookup(cidx, string_field(doc, "p"), "candidate");
    out.instance.budget = int_field(doc, "budget");

    CostModel costs;
    costs.mode = parse_mode(string_field(doc, "mode"));
    const json& cost_doc = field(doc, "costs");
    costs.default_cost =
        cost_doc.contains("default_cost") ? parse_cost(cost_doc.at("default_cost"), "default_cost")
                                          : Cost{std::nullopt};
    if (cost_doc.contains("entries")) {
        for (const json& entry : cost_doc.at("entries")) {
            int voter = lookup(vidx, string_field(entry, "voter"), "voter");
            Cost c = parse_cost(field(entry, "cost"), "cost entry");
            if (entry.contains("candidate")) {
                costs.set_add(voter, lookup(cidx, string_field(entry, "candidate"), "candidate"), c);
            } else {
                int from = lookup(cidx, string_field(entry, "from"), "candidate");
                int to = lookup(cidx, string_field(entry, "to"), "candidate");
                if (from == to) throw input_error("cost entry with from == to");
                costs.set_swap(voter, from, to, c);
            }
        }
    }
    out.instance.costs = std::move(costs);

    out.instance.check_valid();
    if (!witness_holds(out.instance.election, out.instance.witness))
        throw input_error("election does not satisfy the declared witness");
    return out;
}

std::string serialize_instance(const NamedInstance& named) {
    const BriberyInstance& inst = named.instance;
    json doc = election_to_json(inst.election, named.candidate_names, named.voter_names);

    json witness;
    witness["kind"] = kind_name(inst.witness.kind);
    if (inst.witness.kind != DomainKind::Unrestricted) {
        json order = json::array();
        const bool over_candidates = inst.witness.kind == DomainKind::CandidateInterval;
        for (int idx : inst.witness.order)
            order.push_back(over_candidates ? named.candidate_names[idx] : named.voter_names[idx]);
        witness["order"] = order;
    }
    doc["witness"] = witness;
    doc["k"] = inst.committee_size;
    doc["p"] = named.candidate_names[inst.preferred];
    doc["budget"] = inst.budget;
    doc["mode"] = mode_name(inst.costs.mode);

    json costs;
    costs["default_cost"] = cost_to_json(inst.costs.default_cost);
    json entries = json::array();
    for (const auto& [key, cost] : inst.costs.table) {
        json entry;
        entry["voter"] = named.voter_names[key[0]];
        if (key[2] == -1) {
            entry["candidate"] = named.candidate_names[key[1]];
        } else {
            entry["from"] = named.candidate_names[key[1]];
            entry["to"] = named.candidate_names[key[2]];
        }
        entry["cost"] = cost_to_json(cost);
        entries.push_back(entry);
    }
    costs["entries"] = entries;
    doc["costs"] = costs;
    return doc.dump(2) + "\n";
}

namespace {

json op_to_json(const UnitOperation& op, const NamedInstance& named) {
    json entry;
    entry["voter"] = named.voter_names[op.voter];
    switch (op.kind) {
        case OpKind::Add:
            entry["kind"] = "add";
            entry["candidate"] = named.candidate_names[op.candidate];
            break;
        case OpKind::Delete:
            entry["kind"] = "delete";
            entry["candidate"] = named.candidate_names[op.candidate];
            break;
        case OpKind::Swap:
            entry["kind"] = "swap";
            entry["from"] = named.candidate_names[op.from];
            entry["to"] = named.candidate_names[op.to];
            break;
    }
    return entry;
}

}  // namespace

BriberyPlan parse_plan(const std::string& text, const NamedInstance& named) {
    json doc = parse_json(text);
    std::map<std::string, int> cidx = index_names(named.candidate_names, "candidate");
    std::map<std::string, int> vidx = index_names(named.voter_names, "voter");
    BriberyPlan plan;
    for (const json& entry : field(doc, "ops")) {
        std::string kind = string_field(entry, "kind");
        int voter = lookup(vidx, string_field(entry, "voter"), "voter");
        if (kind == "add")
            plan.ops.push_back(
                UnitOperation::add(voter, lookup(cidx, string_field(entry, "candidate"), "candidate")));
        else if (kind == "delete")
            plan.ops.push_back(
                UnitOperation::del(voter, lookup(cidx, string_field(entry, "candidate"), "candidate")));
        else if (kind == "swap")
            plan.ops.push_back(
                UnitOperation::swap(voter, lookup(cidx, string_field(entry, "from"), "candidate"),
                                    lookup(cidx, string_field(entry, "to"), "candidate")));
        else
            throw input_error("unknown op kind \"" + kind + "\"");
    }
    plan.total_cost = int_field(doc, "total_cost");
    return plan;
}

std::string serialize_plan(const BriberyPlan& plan, const NamedInstance& named) {
    json doc;
    json ops = json::array();
    for (const UnitOperation& op : plan.ops) ops.push_back(op_to_json(op, named));
    doc["ops"] = ops;
    doc["total_cost"] = plan.total_cost;
    return doc.dump(2) + "\n";
}

std::string serialize_outcome(const SolveOutcome& outcome, const NamedInstance& named,
                              const std::string& solver_used) {
    json doc;
    doc["feasible"] = outcome.feasible;
    doc["optimal_cost"] = outcome.optimal_cost ? json(*outcome.optimal_cost) : json(nullptr);
    if (outcome.plan) {
        json ops = json::array();
        for (const UnitOperation& op : outcome.plan->ops) ops.push_back(op_to_json(op, named));
        doc["plan"] = json{{"ops", ops}, {"total_cost", outcome.plan->total_cost}};
    } else {
        doc["plan"] = json(nullptr);
    }
    doc["solver_used"] = solver_used;
    return doc.dump(2) + "\n";
}

std::string serialize_report(const VerificationReport& report) {
    json doc;
    doc["ops_applicable"] = report.ops_applicable;
    doc["cost_within_budget"] = report.cost_within_budget;
    doc["structure_preserved"] = report.structure_preserved;
    doc["p_wins"] = report.p_wins;
    doc["valid"] = report.valid();
    if (!report.detail.empty()) doc["detail"] = report.detail;
    return doc.dump(2) + "\n";
}

Rx3cInstance parse_rx3c(const std::string& text) {
    json doc = parse_json(text);
    Rx3cInstance src;
    src.n = static_cast<int>(int_field(doc, "n"));
    if (src.n < 1) throw input_error("RX3C: n must be positive");
    std::vector<std::string> universe;
    for (const json& u : field(doc, "universe")) universe.push_back(u.get<std::string>());
    std::map<std::string, int> uidx = index_names(universe, "element");
    if (static_cast<int>(universe.size()) != 3 * src.n)
        throw input_error("RX3C: universe must have exactly 3n elements");
    for (const json& s : field(doc, "sets")) {
        if (!s.is_array() || s.size() != 3) throw input_error("RX3C: sets must have three elements");
        std::array<int, 3> t{lookup(uidx, s[0].get<std::string>(), "element"),
                             lookup(uidx, s[1].get<std::string>(), "element"),
                             lookup(uidx, s[2].get<std::string>(), "element")};
        std::sort(t.begin(), t.end());
        src.sets.push_back(t);
    }
    src.check_valid();
    return src;
}

std::string serialize_rx3c(const Rx3cInstance& src) {
    json doc;
    doc["n"] = src.n;
    json universe = json::array();
    for (int e = 0; e < 3 * src.n; ++e) universe.push_back("x" + std::to_string(e + 1));
    doc["universe"] = universe;
    json sets = json::array();
    for (const auto& s : src.sets) {
        json one = json::array();
        for (int e : s) one.push_back("x" + std::to_string(e + 1));
        sets.push_back(one);
    }
    doc["sets"] = sets;
    return doc.dump(2) + "\n";
}

CubicGraph parse_cubic_graph(const std::string& text) {
    json doc = parse_json(text);
    CubicGraph g;
    std::vector<std::string> vertices;
    for (const json& v : field(doc, "vertices")) vertices.push_back(v.get<std::string>());
    std::map<std::string, int> vidx = index_names(vertices, "vertex");
    g.num_vertices = static_cast<int>(vertices.size());
    for (const json& e : field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("graph edges must be pairs");
        int a = lookup(vidx, e[0].get<std::string>(), "vertex");
        int b = lookup(vidx, e[1].get<std::string>(), "vertex");
        if (a == b) throw input_error("graph has a self-loop");
        g.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.check_valid();
    return g;
}

std::string serialize_cubic_graph(const CubicGraph& graph) {
    json doc;
    json vertices = json::array();
    for (int v = 0; v < graph.num_vertices; ++v) vertices.push_back("c" + std::to_string(v + 1));
    doc["vertices"] = vertices;
    json edges = json::array();
    for (auto [a, b] : graph.edges)
        edges.push_back(json::array({"c" + std::to_string(a + 1), "c" + std::to_string(b + 1)}));
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

NamedInstance named_from_bundle(const ReductionBundle& bundle) {
    return NamedInstance{bundle.instance, bundle.candidate_names, bundle.voter_names};
}

std::string serialize_bundle(const ReductionBundle& bundle) {
    json doc;
    doc["instance"] = parse_json(serialize_instance(named_from_bundle(bundle)));
    json croles;
    for (size_t i = 0; i < bundle.candidate_roles.size(); ++i)
        croles[bundle.candidate_names[i]] = bundle.candidate_roles[i];
    json vroles;
    for (size_t i = 0; i < bundle.voter_roles.size(); ++i)
        vroles[bundle.voter_names[i]] = bundle.voter_roles[i];
    doc["candidate_roles"] = croles;
    doc["voter_roles"] = vroles;
    return doc.dump(2) + "\n";
}

NamedInstance with_default_names(const BriberyInstance& instance) {
    NamedInstance named;
    named.instance = instance;
    for (int c = 0; c < instance.election.num_candidates; ++c)
        named.candidate_names.push_back("c" + std::to_string(c));
    for (int v = 0; v < instance.election.num_voters(); ++v)
        named.voter_names.push_back("v" + std::to_string(v));
    return named;
}

}  // namespace bribery
