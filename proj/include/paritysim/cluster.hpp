#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paritysim/schedule.hpp"

namespace psim::cluster {

/// Undirected simple graph on vertices 1..n.
struct GraphSpec {
    int n_vertices;
    std::vector<std::pair<int, int>> edges;

    static GraphSpec chain(int n);

    void validate() const;
    bool is_chain() const;
    std::vector<int> neighbors(int vertex) const;
};

/// One stabilizer per vertex: X on the vertex, Z on each neighbor.
std::vector<PauliString> stabilizers_for(const GraphSpec& g);

/// Reference state: CZ over every edge applied to |+...+>.
StateVector canonical_cluster(const GraphSpec& g);

struct GadgetResult {
    ParityOutcome outcome;
    double probability;
    StateVector state;
};

/// Entangling gadget on (j, k): Z-parity check, X on k for the odd outcome,
/// then H on k. Equals CZ_{jk} whenever k enters fresh in |+> (asserted in
/// debug builds), for either detector outcome.
GadgetResult gadget(const StateVector& s, int j, int k, std::optional<int> forced = std::nullopt);

/// True iff qubit k factors out as |+> (amplitudes independent of its bit).
bool is_fresh_plus(const StateVector& s, int k, double tol);

/// Chain pipeline with inline corrections: for j = 1..n-1, parity check on
/// (j, j+1) labeled Pj, X on j+1 when odd, H on j+1.
CircuitSchedule chain_schedule(int n);

/// Variant without the conditional flips; used to derive deferred corrections.
CircuitSchedule chain_schedule_raw(int n);

struct PreparationRecord {
    int n;
    std::string outcomes;  // detector bits P1..P_{n-1}, '1' = even
    std::vector<std::pair<Pauli, int>> corrections;
    double probability;
    StateVector final_state;
    std::vector<double> stabilizer_expectations;
    bool pass;
};

/// Runs the chain pipeline from |+>^n and verifies stabilizers per branch.
std::vector<PreparationRecord> prepare_cluster(const GraphSpec& g, const RunMode& mode,
                                               double verify_tol = 1e-10);

struct CorrectionRule {
    std::string pattern;
    std::vector<std::pair<Pauli, int>> paulis;  // applied after the full raw pipeline
};

struct CorrectionTable {
    int n;
    std::vector<CorrectionRule> rules;  // canonical branch order (all-even first)
    bool verified;
};

inline constexpr int kMaxCorrectionTableQubits = 6;

/// For every outcome pattern of the raw pipeline, the minimal X/Z string that
/// maps the branch state onto the canonical cluster up to global phase.
/// Candidates are ordered by weight, then lexicographically with I < X < Z.
CorrectionTable derive_correction_table(int n);

struct ClusterVerification {
    std::vector<double> expectations;  // one per vertex
    bool pass;
};

ClusterVerification verify_cluster(const StateVector& s, const GraphSpec& g, double tol = 1e-10);

}  // namespace psim::cluster
