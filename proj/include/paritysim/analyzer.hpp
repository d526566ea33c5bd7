#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paritysim/schedule.hpp"

namespace psim::analyzer {

enum class Family { Bell, GHZ3, Quad };

int family_qubits(Family f);
std::string family_name(Family f);
Family parse_family(std::string_view name);
std::string class_name(Family f, int cls);  // "phi", "g2", "vii", ...

/// Name of one state of an entangled basis family.
///
/// Bell cls: 0 = phi, 1 = psi. GHZ3 cls: 0..3 = groups g1..g4, where g1 pairs
/// |000>/|111>, g2 |110>/|001>, g3 |010>/|101>, g4 |100>/|011>. Quad cls:
/// 0..7 = roman i..viii. sign is +1 or -1.
struct EntangledLabel {
    Family family;
    int cls;
    int sign;

    bool operator==(const EntangledLabel&) const = default;
};

std::string to_string(const EntangledLabel& label);  // "bell:phi+", "ghz3:g2-", "quad:vii+"
EntangledLabel parse_label(std::string_view text);

std::vector<EntangledLabel> family_labels(Family f);
StateVector basis_state(const EntangledLabel& label);

/// Measurement schedule plus the outcome -> label decoding function.
struct DecisionTree {
    Family family;
    CircuitSchedule schedule;
    EntangledLabel (*decode)(const OutcomeList&);
};

/// Z-parity then X-parity on (1,2); nondestructive.
DecisionTree bell_analyzer();

/// Z-parity (1,2) with X on qubit 1 for the odd outcome, Z-parity (2,3),
/// X measurement of qubit 3, X-parity (1,2). Destroys one qubit.
DecisionTree ghz3_analyzer();

/// Z-parities on (1,2) and (3,4) with odd-outcome flips on qubits 1 and 4,
/// Z-parity (2,3), X measurements of qubits 3 and 4, X-parity (1,2).
/// Destroys two qubits.
DecisionTree quad_analyzer();

struct ClassifiedBranch {
    OutcomeList outcomes;
    double probability;
    EntangledLabel label;
    StateVector final_state;
};

struct ClassificationReport {
    Family family;
    std::string input_name;
    std::vector<ClassifiedBranch> branches;
    bool deterministic;  // all branches agree (and match the named input if known)
    int destroyed_qubits;
};

ClassificationReport classify(const DecisionTree& tree, const StateVector& s, const RunMode& mode,
                              const std::optional<EntangledLabel>& true_label = std::nullopt);

struct DecompositionReport {
    double ghz3_expansion_scale;  // constant multiplying the product forms, 1/sqrt(2)
    double ghz3_max_deviation;
    double quad_max_deviation;
    // Labels whose printed product form equals minus the defining state; the
    // expansion is verified against the measured constant, not repaired.
    std::vector<std::string> quad_sign_flips;
    double gram_max_deviation;  // orthonormality over all three families
    bool pass;
};

/// Verifies every Bell-product expansion of the GHZ3 and Quad families
/// against the defining states, and the orthonormality of each family. Each
/// identity is checked against the measured proportionality constant; the
/// constants themselves (the overall 1/sqrt(2) of the three-qubit forms and
/// the global signs of the four-qubit forms) are recorded in the report.
DecompositionReport verify_decompositions(double tol = 1e-12);

struct GroupTables {
    // Quad family: detector pattern "P1P2" -> classes, and "P1P2P3" -> class.
    std::vector<std::pair<std::string, std::vector<int>>> quad_sets;
    std::vector<std::pair<std::string, int>> quad_classes;
    // GHZ3 family: "P1P2" -> group index.
    std::vector<std::pair<std::string, int>> ghz3_groups;
    bool verified;
};

/// Extracts the detector-pattern grouping by running the analyzers over every
/// basis state and checking consistency across branches.
GroupTables derive_group_tables();

}  // namespace psim::analyzer
