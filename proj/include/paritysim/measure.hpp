#pragma once

#include <optional>

#include "paritysim/state.hpp"

namespace psim {

enum class ParityBasis { Z, X };

/// Detector readout: value 1 means even parity (the |00>,|11> subspace for the
/// Z basis, |++>,|--> for X), value 0 means odd.
struct ParityOutcome {
    int value;
    ParityBasis basis;
};

struct ParityResult {
    ParityOutcome outcome;
    double probability;  // pre-collapse branch weight
    StateVector state;   // renormalized; both qubits survive
};

struct ParityProbabilities {
    double even;
    double odd;
};

ParityProbabilities parity_probabilities(const StateVector& s, int qubit_a, int qubit_b,
                                         ParityBasis basis);

/// Nondestructive two-qubit parity measurement. Without `forced` the more
/// probable branch is returned (ties resolve to even). Forcing a branch whose
/// probability is <= kEpsPrune throws std::invalid_argument.
ParityResult parity_check(const StateVector& s, int qubit_a, int qubit_b, ParityBasis basis,
                          std::optional<int> forced = std::nullopt);

struct MeasureXResult {
    int click;  // 1 = |+>, 0 = |->
    double probability;
    StateVector state;  // qubit removed, remaining register re-indexed
};

/// Destructive X-basis measurement of one qubit. Unforced behaves like
/// parity_check: more probable click wins, ties resolve to +.
MeasureXResult measure_x(const StateVector& s, int qubit, std::optional<int> forced = std::nullopt);

}  // namespace psim
