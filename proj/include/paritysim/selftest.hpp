#pragma once

#include <string>
#include <vector>

namespace psim::selftest {

struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the full verification battery: parity-collapse values, golden chain
/// amplitudes, stabilizer checks up to 12 qubits, branch determinism, the
/// three analyzers, decomposition identities, the fermionic encoder POVM, and
/// measurement statistics against the projection oracle.
std::vector<CriterionResult> run_acceptance();

bool all_pass(const std::vector<CriterionResult>& results);

// Golden amplitude patterns for the all-even chain preparations.
extern const double kChain2Amps[4];
extern const double kChain4Amps[16];

}  // namespace psim::selftest
