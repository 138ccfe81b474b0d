#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bribery/exact_oracle.hpp"
#include "bribery/io.hpp"
#include "bribery/poly_solvers.hpp"
#include "bribery/reductions.hpp"
#include "bribery/structure.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct cli_failure {
    int code;
    std::string kind;
    std::string message;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_failure{exit_usage, "usage", "cannot open file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

using bribery::BriberyInstance;
using bribery::DomainKind;
using bribery::NamedInstance;
using bribery::OperationMode;
using bribery::SolveOutcome;

std::string auto_solver(const BriberyInstance& inst) {
    const DomainKind kind = inst.witness.kind;
    switch (inst.costs.mode) {
        case OperationMode::Add:
            if (kind == DomainKind::VoterInterval) return "add-vi";
            if (kind == DomainKind::CandidateInterval) return "add-ci";
            break;
        case OperationMode::Delete:
            if (kind == DomainKind::VoterInterval) return "del-vi";
            if (kind == DomainKind::CandidateInterval)
                throw cli_failure{exit_usage, "usage",
                                  "deletion bribery under a CI witness is NP-hard; pass --solver "
                                  "bb-del or --solver oracle explicitly"};
            break;
        case OperationMode::SwapToP:
            if (kind == DomainKind::CandidateInterval) return "swap2p-ci";
            if (kind == DomainKind::VoterInterval) return "swap2p-vi";
            break;
        case OperationMode::Swap:
            throw cli_failure{exit_usage, "usage",
                              "unconstrained swap bribery is NP-hard on CI and VI domains; pass "
                              "--solver oracle explicitly"};
    }
    throw cli_failure{exit_usage, "usage",
                      "no polynomial solver for this mode/witness combination; pass --solver oracle "
                      "explicitly"};
}

SolveOutcome run_solver(const std::string& solver, const BriberyInstance& inst, long long max_states) {
    if (solver == "add-vi") return bribery::solve_add_vi(inst);
    if (solver == "add-ci") return bribery::solve_add_ci(inst);
    if (solver == "del-vi") return bribery::solve_del_vi(inst);
    if (solver == "swap2p-ci") return bribery::solve_swap_to_p_ci(inst);
    if (solver == "swap2p-vi") return bribery::solve_swap_to_p_vi(inst);
    if (solver == "bb-del") return bribery::bb_solve_deletions(inst);
    if (solver == "oracle") {
        bribery::OracleOptions opt = bribery::oracle_options_from_env();
        if (max_states > 0) opt.max_states = max_states;
        return bribery::oracle_solve(inst, opt);
    }
    throw cli_failure{exit_usage, "usage", "unknown solver \"" + solver + "\""};
}

int dispatch(int argc, char** argv) {
    CLI::App app{"bribery: solvers, verifiers and hardness gadgets for structured approval elections"};
    app.set_help_flag("--help", "print help and exit");  // keep -h free for reduce --h
    app.require_subcommand(1);

    std::string instance_path, plan_path, election_path, solver = "auto", kind, from, source_path,
                what, domain = "unrestricted", mode = "add", p_name;
    long long max_states = 0, seed = 0, budget = 0;
    int gen_n = 1, gen_m = 1, committee = 1, is_size = 1;
    double density = 0.5;

    CLI::App* solve = app.add_subcommand("solve", "solve a bribery instance");
    solve->add_option("--instance", instance_path)->required();
    solve->add_option("--solver", solver)
        ->check(CLI::IsMember({"auto", "add-ci", "add-vi", "del-vi", "swap2p-ci", "swap2p-vi",
                               "oracle", "bb-del"}));
    solve->add_option("--max-states", max_states);

    CLI::App* verify = app.add_subcommand("verify", "verify a plan against an instance");
    verify->add_option("--instance", instance_path)->required();
    verify->add_option("--plan", plan_path)->required();

    CLI::App* recognize = app.add_subcommand("recognize", "find a CI/VI witness for an election");
    recognize->add_option("--election", election_path)->required();
    recognize->add_option("--kind", kind)->required()->check(CLI::IsMember({"ci", "vi"}));

    CLI::App* reduce = app.add_subcommand("reduce", "materialize a hardness reduction");
    reduce->add_option("--from", from)
        ->required()
        ->check(CLI::IsMember({"rx3c-delci", "cis-swapci", "rx3c-swapvi"}));
    reduce->add_option("--source", source_path)->required();
    reduce->add_option("--h", is_size, "independent set size (cis-swapci)");

    CLI::App* gen = app.add_subcommand("gen", "generate source problems and random elections");
    gen->add_option("--what", what)->required()->check(CLI::IsMember({"rx3c", "cubic", "election"}));
    gen->add_option("--n", gen_n);
    gen->add_option("--m", gen_m);
    gen->add_option("--density", density);
    gen->add_option("--domain", domain)->check(CLI::IsMember({"ci", "vi", "unrestricted"}));
    gen->add_option("--seed", seed);
    gen->add_option("--k", committee);
    gen->add_option("--budget", budget);
    gen->add_option("--mode", mode)->check(CLI::IsMember({"add", "delete", "swap", "swap-to-p"}));
    gen->add_option("--p", p_name, "preferred candidate name (default c0)");

    CLI::App* oracle = app.add_subcommand("oracle", "solve with the exact search oracle");
    oracle->add_option("--instance", instance_path)->required();
    oracle->add_option("--max-states", max_states);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << nlohmann::json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_usage;
    }

    if (solve->parsed()) {
        NamedInstance named = bribery::parse_instance(read_file(instance_path));
        std::string chosen = solver == "auto" ? auto_solver(named.instance) : solver;
        SolveOutcome outcome = run_solver(chosen, named.instance, max_states);
        std::cout << bribery::serialize_outcome(outcome, named, chosen);
        return exit_ok;
    }
    if (oracle->parsed()) {
        NamedInstance named = bribery::parse_instance(read_file(instance_path));
        SolveOutcome outcome = run_solver("oracle", named.instance, max_states);
        std::cout << bribery::serialize_outcome(outcome, named, "oracle");
        return exit_ok;
    }
    if (verify->parsed()) {
        NamedInstance named = bribery::parse_instance(read_file(instance_path));
        bribery::BriberyPlan plan = bribery::parse_plan(read_file(plan_path), named);
        bribery::VerificationReport report = bribery::verify_solution(named.instance, plan);
        std::cout << bribery::serialize_report(report);
        return report.valid() ? exit_ok : exit_semantic;
    }
    if (recognize->parsed()) {
        bribery::NamedElection named = bribery::parse_election_document(read_file(election_path));
        std::optional<std::vector<int>> order = kind == "ci" ? bribery::recognize_ci(named.election)
                                                             : bribery::recognize_vi(named.election);
        nlohmann::json doc;
        doc["found"] = order.has_value();
        if (order) {
            nlohmann::json names = nlohmann::json::array();
            for (int idx : *order)
                names.push_back(kind == "ci" ? named.candidate_names[idx] : named.voter_names[idx]);
            doc["witness"] = {{"kind", kind}, {"order", names}};
        } else {
            doc["witness"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
        return exit_ok;
    }
    if (reduce->parsed()) {
        bribery::ReductionBundle bundle;
        if (from == "rx3c-delci")
            bundle = bribery::reduce_rx3c_to_del_ci(bribery::parse_rx3c(read_file(source_path)));
        else if (from == "rx3c-swapvi")
            bundle = bribery::reduce_rx3c_to_swap_vi(bribery::parse_rx3c(read_file(source_path)));
        else
            bundle = bribery::reduce_cubic_is_to_swap_ci(
                bribery::parse_cubic_graph(read_file(source_path)), is_size);
        std::cout << bribery::serialize_bundle(bundle);
        return exit_ok;
    }
    if (gen->parsed()) {
        if (what == "rx3c") {
            std::cout << bribery::serialize_rx3c(bribery::gen_rx3c(gen_n, seed));
        } else if (what == "cubic") {
            std::cout << bribery::serialize_cubic_graph(bribery::gen_cubic_graph(gen_n, seed));
        } else {
            DomainKind kind = domain == "ci" ? DomainKind::CandidateInterval
                              : domain == "vi" ? DomainKind::VoterInterval
                                               : DomainKind::Unrestricted;
            auto [election, witness] = bribery::gen_random_election(gen_m, gen_n, density, kind, seed);
            BriberyInstance inst;
            inst.election = election;
            inst.witness = witness;
            inst.committee_size = committee;
            inst.budget = budget;
            inst.costs = bribery::CostModel::unit(
                mode == "add" ? OperationMode::Add
                              : mode == "delete" ? OperationMode::Delete
                                                 : mode == "swap" ? OperationMode::Swap
                                                                  : OperationMode::SwapToP);
            NamedInstance named = bribery::with_default_names(inst);
            inst.preferred = p_name.empty() ? 0 : named.candidate_index(p_name);
            named.instance = inst;
            std::cout << bribery::serialize_instance(named);
        }
        return exit_ok;
    }
    return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const cli_failure& f) {
        std::cerr << nlohmann::json{{"error", {{"kind", f.kind}, {"message", f.message}}}}.dump()
                  << "\n";
        return f.code;
    } catch (const bribery::syntax_error& e) {
        std::cerr << nlohmann::json{{"error", {{"kind", "syntax"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_usage;
    } catch (const bribery::resource_error& e) {
        std::cerr << nlohmann::json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_resource;
    } catch (const std::exception& e) {  // input_error, plan_error and friends
        std::cerr << nlohmann::json{{"error", {{"kind", "semantic"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return exit_semantic;
    }
}
