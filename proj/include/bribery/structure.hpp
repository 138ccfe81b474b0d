#pragma once

#include <optional>
#include <vector>

#include "bribery/election.hpp"

// Validation and recognition of the candidate-interval (CI) and
// voter-interval (VI) properties.

namespace bribery {

// Positional support range of one ballot (CI) or one candidate (VI)
// under the witness order; first > last encodes an empty row.
struct IntervalEntry {
    int first = 0, last = -1;
    bool empty() const { return first > last; }
};

struct IntervalCertificate {
    std::vector<IntervalEntry> entries;  // per ballot (CI) / per candidate (VI)
};

struct IntervalViolation {
    int row = -1;           // offending voter (CI) or candidate (VI)
    int gap_position = -1;  // first uncovered position inside the support range
};

struct ValidationResult {
    std::optional<IntervalCertificate> certificate;  // present iff valid
    std::optional<IntervalViolation> violation;
    bool ok() const { return certificate.has_value(); }
};

ValidationResult validate_ci(const Election& e, const std::vector<int>& axis);
ValidationResult validate_vi(const Election& e, const std::vector<int>& voter_order);

bool witness_holds(const Election& e, const DomainWitness& witness);

// Consecutive-ones recognition. Returns some witness order when one
// exists (not canonicalized), nullopt otherwise.
std::optional<std::vector<int>> recognize_ci(const Election& e);
std::optional<std::vector<int>> recognize_vi(const Election& e);

// Exhaustive reference recognizers, intended for tests (factorial time;
// refuse more than brute_force_limit orderable items).
inline constexpr int brute_force_limit = 8;
std::optional<std::vector<int>> recognize_ci_brute_force(const Election& e);
std::optional<std::vector<int>> recognize_vi_brute_force(const Election& e);

// Generic consecutive-ones core: order `num_columns` columns so that every
// row becomes contiguous.
std::optional<std::vector<int>> consecutive_ones_order(int num_columns,
                                                       const std::vector<std::vector<int>>& rows);

}  // namespace bribery
