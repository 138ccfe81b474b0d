#pragma once

#include <string>
#include <vector>

#include "bribery/election.hpp"
#include "bribery/reductions.hpp"

// File formats: instances and plans as self-describing JSON documents with
// named candidates and voters. Serialization is canonical (sorted keys,
// stable entry order) and byte-stable across runs.

namespace bribery {

// malformed JSON / wrong shape; semantic problems raise input_error instead
struct syntax_error : std::runtime_error {
    explicit syntax_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NamedInstance {
    BriberyInstance instance;
    std::vector<std::string> candidate_names;
    std::vector<std::string> voter_names;

    int candidate_index(const std::string& name) const;
    int voter_index(const std::string& name) const;
};

NamedInstance parse_instance(const std::string& text);
std::string serialize_instance(const NamedInstance& named);

BriberyPlan parse_plan(const std::string& text, const NamedInstance& named);
std::string serialize_plan(const BriberyPlan& plan, const NamedInstance& named);

std::string serialize_outcome(const SolveOutcome& outcome, const NamedInstance& named,
                              const std::string& solver_used);
std::string serialize_report(const VerificationReport& report);

// Election-only documents (candidates + voters), accepted by `recognize`;
// a full instance file parses too.
struct NamedElection {
    Election election;
    std::vector<std::string> candidate_names;
    std::vector<std::string> voter_names;
};
NamedElection parse_election_document(const std::string& text);

// Reduction sources.
Rx3cInstance parse_rx3c(const std::string& text);
std::string serialize_rx3c(const Rx3cInstance& src);
CubicGraph parse_cubic_graph(const std::string& text);
std::string serialize_cubic_graph(const CubicGraph& graph);

// Instance plus gadget role annotations, as emitted by `reduce`.
std::string serialize_bundle(const ReductionBundle& bundle);

NamedInstance named_from_bundle(const ReductionBundle& bundle);

// Default names c0..c{m-1} / v0..v{n-1} for library-level objects.
NamedInstance with_default_names(const BriberyInstance& instance);

}  // namespace bribery
