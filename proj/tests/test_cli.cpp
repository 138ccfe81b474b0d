// End-to-end checks of the command-line surface: exit codes, error JSON,
// byte-equality of `solve` output with the library serialization, reduce
// output re-parsing, and the BRIBERY_MAX_STATES override.
//
// Invoked by ctest with the CLI path as argv[1].

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "bribery/exact_oracle.hpp"
#include "bribery/io.hpp"
#include "bribery/poly_solvers.hpp"
#include "bribery/reductions.hpp"

using namespace bribery;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& cli, const std::string& args, const std::string& env = "") {
    std::string err_path = "cli_test_stderr.txt";
    std::string command = env + " " + cli + " " + args + " 2>" + err_path;
    FILE* pipe = popen(command.c_str(), "r");
    RunResult result;
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path);
    std::ostringstream errbuf;
    errbuf << err.rdbuf();
    result.err = errbuf.str();
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

const char* add_ci_instance = R"({
  "budget": 4,
  "candidates": ["l1", "p", "r1"],
  "costs": {"default_cost": 1, "entries": []},
  "k": 1,
  "mode": "add",
  "p": "p",
  "voters": [
    {"name": "v1", "approves": ["l1"]},
    {"name": "v2", "approves": ["r1"]},
    {"name": "v3", "approves": ["r1"]}
  ],
  "witness": {"kind": "ci", "order": ["l1", "p", "r1"]}
})";

const char* del_ci_instance = R"({
  "budget": 1,
  "candidates": ["a", "p"],
  "costs": {"default_cost": 1, "entries": []},
  "k": 1,
  "mode": "delete",
  "p": "p",
  "voters": [
    {"name": "v1", "approves": ["a"]},
    {"name": "v2", "approves": ["a"]},
    {"name": "v3", "approves": ["p"]}
  ],
  "witness": {"kind": "ci", "order": ["a", "p"]}
})";

const char* swap_instance = R"({
  "budget": 4,
  "candidates": ["a", "b", "c", "p"],
  "costs": {"default_cost": 1, "entries": []},
  "k": 1,
  "mode": "swap",
  "p": "p",
  "voters": [
    {"name": "v1", "approves": ["a"]},
    {"name": "v2", "approves": ["a"]},
    {"name": "v3", "approves": ["b"]},
    {"name": "v4", "approves": ["c"]}
  ],
  "witness": {"kind": "unrestricted"}
})";

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "usage: cli_tests <path-to-bribery-cli>\n";
        return 1;
    }
    std::string cli = argv[1];
    write_file("cli_addci.json", add_ci_instance);
    write_file("cli_delci.json", del_ci_instance);
    write_file("cli_swap.json", swap_instance);

    {
        // solve output matches the library's canonical serialization
        RunResult r = run(cli, "solve --instance cli_addci.json");
        expect(r.code == 0, "solve exits 0");
        NamedInstance named = parse_instance(add_ci_instance);
        std::string expected = serialize_outcome(solve_add_ci(named.instance), named, "add-ci");
        expect(r.out == expected, "solve output equals library serialization");
    }
    {
        // verify: exit 0 on a valid plan, 1 on an invalid one
        NamedInstance named = parse_instance(add_ci_instance);
        SolveOutcome out = solve_add_ci(named.instance);
        write_file("cli_plan.json", serialize_plan(*out.plan, named));
        RunResult good = run(cli, "verify --instance cli_addci.json --plan cli_plan.json");
        expect(good.code == 0, "verify exits 0 on a valid plan");
        expect(good.out.find("\"valid\": true") != std::string::npos, "verify reports valid");

        BriberyPlan broken = *out.plan;
        broken.ops.push_back(UnitOperation::add(0, 2));  // breaks the axis
        write_file("cli_plan_bad.json", serialize_plan(broken, named));
        RunResult bad = run(cli, "verify --instance cli_addci.json --plan cli_plan_bad.json");
        expect(bad.code == 1, "verify exits 1 on an invalid plan");
        expect(bad.out.find("\"structure_preserved\": false") != std::string::npos,
               "verify pinpoints the failing flag");
    }
    {
        // auto dispatch refuses NP-hard combinations with a usage error
        RunResult r = run(cli, "solve --instance cli_delci.json");
        expect(r.code == 2, "del-ci auto dispatch exits 2");
        expect(r.err.find("NP-hard") != std::string::npos, "refusal cites NP-hardness");
        RunResult bb = run(cli, "solve --instance cli_delci.json --solver bb-del");
        expect(bb.code == 0, "explicit bb-del is accepted");
        nlohmann::json doc = nlohmann::json::parse(bb.out);
        expect(doc["feasible"] == true && doc["optimal_cost"] == 1, "bb-del solves the instance");
    }
    {
        // usage, syntax and semantic errors are distinguished
        RunResult r = run(cli, "solve");
        expect(r.code == 2, "missing arguments exit 2");
        write_file("cli_broken.json", "{");
        RunResult s = run(cli, "solve --instance cli_broken.json");
        expect(s.code == 2, "malformed JSON exits 2");
        expect(nlohmann::json::parse(s.err)["error"]["kind"] == "syntax", "syntax error JSON on stderr");
        write_file("cli_undecl.json", std::string(add_ci_instance).replace(
                                          std::string(add_ci_instance).find("\"l1\"]}"), 6, "\"zz\"]}"));
        RunResult t = run(cli, "solve --instance cli_undecl.json");
        expect(t.code == 1, "unknown name exits 1");
    }
    {
        // the oracle state cap surfaces as exit 3, and the env override works
        RunResult r = run(cli, "oracle --instance cli_swap.json --max-states 4");
        expect(r.code == 3, "state cap exits 3");
        expect(nlohmann::json::parse(r.err)["error"]["kind"] == "resource", "resource error JSON");
        RunResult env = run(cli, "oracle --instance cli_swap.json", "BRIBERY_MAX_STATES=4");
        expect(env.code == 3, "BRIBERY_MAX_STATES override is honored");
        RunResult full = run(cli, "oracle --instance cli_swap.json");
        expect(full.code == 0, "unrestricted oracle run succeeds");
    }
    {
        // reduce output re-parses and the embedded instance validates
        RunResult gen = run(cli, "gen --what rx3c --n 1 --seed 5");
        expect(gen.code == 0, "gen rx3c exits 0");
        write_file("cli_rx3c.json", gen.out);
        RunResult red = run(cli, "reduce --from rx3c-delci --source cli_rx3c.json");
        expect(red.code == 0, "reduce exits 0");
        nlohmann::json doc = nlohmann::json::parse(red.out);
        NamedInstance named = parse_instance(doc["instance"].dump());
        expect(named.instance.election.num_candidates == 9, "reduced instance re-parses");
        RunResult swapvi = run(cli, "reduce --from rx3c-swapvi --source cli_rx3c.json");
        expect(swapvi.code == 0, "swap-vi reduction exits 0");
        nlohmann::json doc2 = nlohmann::json::parse(swapvi.out);
        parse_instance(doc2["instance"].dump());  // parse validates the witness
        RunResult graph = run(cli, "gen --what cubic --n 4 --seed 1");
        write_file("cli_k4.json", graph.out);
        RunResult cis = run(cli, "reduce --from cis-swapci --source cli_k4.json --h 1");
        expect(cis.code == 0, "cis-swapci reduction exits 0");
        parse_instance(nlohmann::json::parse(cis.out)["instance"].dump());
    }
    {
        // recognize reports found and none without failing
        RunResult found = run(cli, "recognize --election cli_addci.json --kind ci");
        expect(found.code == 0 && found.out.find("\"found\": true") != std::string::npos,
               "recognize finds the axis");
        const char* tri = R"({"candidates": ["a","b","c"],
                              "voters": [{"name":"v1","approves":["a","b"]},
                                         {"name":"v2","approves":["b","c"]},
                                         {"name":"v3","approves":["a","c"]}]})";
        write_file("cli_tri.json", tri);
        RunResult none = run(cli, "recognize --election cli_tri.json --kind ci");
        expect(none.code == 0 && none.out.find("\"found\": false") != std::string::npos,
               "recognize reports none");
    }

    if (g_failures == 0) {
        std::cout << "all CLI checks passed\n";
        return 0;
    }
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
}
