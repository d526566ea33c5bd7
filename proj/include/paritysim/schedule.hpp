#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paritysim/gates.hpp"
#include "paritysim/measure.hpp"
#include "paritysim/pauli.hpp"

namespace psim {

struct UnitaryOp {
    GateSpec gate;
    int qubit;
};

struct ParityCheckOp {
    int qubit_a;
    int qubit_b;
    ParityBasis basis;
    std::string label;
};

struct MeasureXOp {
    int qubit;
    std::string label;
};

/// Fires when a previously recorded outcome equals `equals`.
struct OutcomeCondition {
    std::string label;
    int equals;
};

struct ConditionalPauliOp {
    OutcomeCondition when;
    Pauli pauli;  // X or Z
    int qubit;
};

using Instruction = std::variant<UnitaryOp, ParityCheckOp, MeasureXOp, ConditionalPauliOp>;

/// Ordered instruction list over a fixed-size register. Qubit indices always
/// refer to the original register positions, also after destructive
/// measurements shrink the live state.
struct CircuitSchedule {
    int n_qubits;
    std::vector<Instruction> items;

    // Throws std::invalid_argument on duplicate labels, out-of-range qubits,
    // or conditions referencing labels that do not appear earlier.
    void validate() const;

    // Labels of measurement instructions, in schedule order.
    std::vector<std::string> outcome_labels() const;
};

using OutcomeList = std::vector<std::pair<std::string, int>>;

int outcome_value(const OutcomeList& outcomes, std::string_view label);

struct BranchRecord {
    OutcomeList outcomes;  // label -> bit, in schedule order
    double probability;
    StateVector final_state;          // surviving qubits in original relative order
    std::vector<int> measured_qubits; // original indices, destructively measured

    bool operator==(const BranchRecord&) const = default;
};

struct EnumerateMode {};
struct SampleMode {
    std::uint64_t seed;
};
/// One character per measurement instruction, in schedule order: '1'/'0'
/// (parity even/odd, click +/-).
struct ForcedMode {
    std::string pattern;
};
using RunMode = std::variant<EnumerateMode, SampleMode, ForcedMode>;

/// Runs the schedule. Enumerate lists every branch with probability above
/// `prune_eps` in canonical order (outcome 1 before 0 at each split); Sample
/// and Forced return a single branch.
std::vector<BranchRecord> run_schedule(const StateVector& s, const CircuitSchedule& sched,
                                       const RunMode& mode, double prune_eps = kEpsPrune);

}  // namespace psim
