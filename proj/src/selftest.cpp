#include "paritysim/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>

#include "paritysim/analyzer.hpp"
#include "paritysim/cluster.hpp"
#include "paritysim/fock.hpp"
#include "paritysim/rng.hpp"

namespace psim::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// --- criterion 1: even-branch parity collapse of |++> ---------------------

CriterionResult check_parity_collapse() {
    auto start = Clock::now();
    auto r = parity_check(StateVector::plus_product(2), 1, 2, ParityBasis::Z, 1);
    double elapsed = ms_since(start);

    double dev = std::abs(r.probability - 0.5);
    dev = std::max(dev, std::abs(r.state.amp(0) - Amplitude{kInvSqrt2, 0.0}));
    dev = std::max(dev, std::abs(r.state.amp(1)));
    dev = std::max(dev, std::abs(r.state.amp(2)));
    dev = std::max(dev, std::abs(r.state.amp(3) - Amplitude{kInvSqrt2, 0.0}));

    bool pass = r.outcome.value == 1 && dev <= 1e-12 && elapsed < 1.0;
    return {1, "even-branch parity collapse of |++>", pass,
            fmt("max dev %.2e, %.3f ms", dev, elapsed)};
}

// --- criterion 2: golden chain amplitudes ----------------------------------

double chain_amp_deviation(int n, const double* expected) {
    auto g = cluster::GraphSpec::chain(n);
    auto records = cluster::prepare_cluster(g, ForcedMode{std::string(n - 1, '1')});
    double dev = 0.0;
    for (std::uint64_t i = 0; i < records.at(0).final_state.dim(); ++i) {
        dev = std::max(dev, std::abs(records[0].final_state.amp(i) - Amplitude{expected[i], 0.0}));
    }
    return dev;
}

CriterionResult check_golden_amplitudes() {
    double dev = std::max(chain_amp_deviation(2, kChain2Amps), chain_amp_deviation(4, kChain4Amps));
    return {2, "all-even chain amplitudes vs golden pattern", dev <= 1e-12,
            fmt("max dev %.2e", dev)};
}

// --- criteria 3 and 4: stabilizers and branch determinism ------------------

CriterionResult check_stabilizers_and_scaling() {
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
        auto g = cluster::GraphSpec::chain(n);
        for (const RunMode& mode :
             {RunMode{ForcedMode{std::string(n - 1, '1')}},
              RunMode{SampleMode{static_cast<std::uint64_t>(1000 + n)}}}) {
            for (const auto& rec : cluster::prepare_cluster(g, mode)) {
                for (double e : rec.stabilizer_expectations) {
                    worst = std::max(worst, std::abs(e - 1.0));
                }
            }
        }
    }

    auto start = Clock::now();
    auto g12 = cluster::GraphSpec::chain(12);
    auto branches = cluster::prepare_cluster(g12, EnumerateMode{});
    StateVector target = cluster::canonical_cluster(g12);
    bool branches_ok = branches.size() == (std::size_t{1} << 11);
    for (const auto& rec : branches) {
        branches_ok = branches_ok && equal_up_to_global_phase(rec.final_state, target, 1e-10);
        for (double e : rec.stabilizer_expectations) {
            worst = std::max(worst, std::abs(e - 1.0));
        }
    }
    double elapsed = ms_since(start);

    bool pass = worst <= 1e-10 && branches_ok && elapsed < 60000.0;
    return {3, "chain stabilizers +1 for N=2..12, full 12-qubit enumeration", pass,
            fmt("max dev %.2e, %zu branches, %.0f ms", worst, branches.size(), elapsed)};
}

CriterionResult check_branch_determinism() {
    int failures = 0;
    for (int n = 2; n <= 8; ++n) {
        auto g = cluster::GraphSpec::chain(n);
        StateVector target = cluster::canonical_cluster(g);
        auto records = cluster::prepare_cluster(g, EnumerateMode{});
        if (records.size() != (std::size_t{1} << (n - 1))) {
            ++failures;
        }
        for (const auto& rec : records) {
            if (!equal_up_to_global_phase(rec.final_state, target, 1e-12)) {
                ++failures;
            }
        }
    }
    return {4, "identical cluster on every outcome branch for N<=8", failures == 0,
            fmt("%d failures", failures)};
}

// --- criteria 5-7: analyzers ------------------------------------------------

CriterionResult check_bell_analyzer() {
    auto tree = analyzer::bell_analyzer();
    // Detector signature per input: phi+ (1,1), phi- (1,0), psi+ (0,1), psi- (0,0).
    bool pass = true;
    double fid_dev = 0.0;
    for (const auto& label : analyzer::family_labels(analyzer::Family::Bell)) {
        StateVector input = analyzer::basis_state(label);
        auto report = analyzer::classify(tree, input, EnumerateMode{}, label);
        pass = pass && report.deterministic && report.branches.size() == 1;
        const auto& branch = report.branches.front();
        int expect_p1 = label.cls == 0 ? 1 : 0;
        int expect_p2 = label.sign > 0 ? 1 : 0;
        pass = pass && outcome_value(branch.outcomes, "P1") == expect_p1 &&
               outcome_value(branch.outcomes, "P2") == expect_p2;
        fid_dev = std::max(fid_dev, 1.0 - overlap_magnitude(branch.final_state, input));
    }
    pass = pass && fid_dev <= 1e-12;
    return {5, "Bell analyzer detector mapping and nondestructiveness", pass,
            fmt("fidelity dev %.2e", fid_dev)};
}

CriterionResult check_ghz3_analyzer() {
    auto tree = analyzer::ghz3_analyzer();
    bool pass = true;
    for (const auto& label : analyzer::family_labels(analyzer::Family::GHZ3)) {
        auto report =
            analyzer::classify(tree, analyzer::basis_state(label), EnumerateMode{}, label);
        pass = pass && report.deterministic;
        double total = 0.0;
        for (const auto& branch : report.branches) {
            total += branch.probability;
        }
        pass = pass && std::abs(total - 1.0) <= 1e-12;

        // Sign readout for the |000>/|111> group: + on (click +, P3=1) and
        // (click -, P3=0), - otherwise.
        if (label.cls == 0) {
            for (const auto& branch : report.branches) {
                int click = outcome_value(branch.outcomes, "M");
                int p3 = outcome_value(branch.outcomes, "P3");
                int expect_sign = (click == p3) ? +1 : -1;
                pass = pass && expect_sign == label.sign;
            }
        }
    }
    return {6, "three-qubit analyzer exhaustive classification", pass, ""};
}

// Detector values computed from the defining bitstrings alone.
struct PatternOracle {
    static int bit(int bits, int qubit, int n) { return (bits >> (n - qubit)) & 1; }

    static std::string ghz3(int rep) {
        int p1 = 1 - (bit(rep, 1, 3) ^ bit(rep, 2, 3));
        if (p1 == 0) {
            rep ^= 1 << 2;  // flip qubit 1
        }
        int p2 = 1 - (bit(rep, 2, 3) ^ bit(rep, 3, 3));
        return {static_cast<char>('0' + p1), static_cast<char>('0' + p2)};
    }

    static std::string quad(int rep) {
        int p1 = 1 - (bit(rep, 1, 4) ^ bit(rep, 2, 4));
        if (p1 == 0) {
            rep ^= 1 << 3;  // flip qubit 1
        }
        int p2 = 1 - (bit(rep, 3, 4) ^ bit(rep, 4, 4));
        if (p2 == 0) {
            rep ^= 1;  // flip qubit 4
        }
        int p3 = 1 - (bit(rep, 2, 4) ^ bit(rep, 3, 4));
        return {static_cast<char>('0' + p1), static_cast<char>('0' + p2),
                static_cast<char>('0' + p3)};
    }
};

CriterionResult check_quad_analyzer() {
    auto tree = analyzer::quad_analyzer();
    bool pass = true;
    for (const auto& label : analyzer::family_labels(analyzer::Family::Quad)) {
        auto report =
            analyzer::classify(tree, analyzer::basis_state(label), EnumerateMode{}, label);
        pass = pass && report.deterministic;
        double total = 0.0;
        for (const auto& branch : report.branches) {
            total += branch.probability;
        }
        pass = pass && std::abs(total - 1.0) <= 1e-12;
    }

    // Derived grouping against the bitstring-parity oracle.
    auto tables = analyzer::derive_group_tables();
    pass = pass && tables.verified;
    static constexpr int kQuadReps[8] = {0b0000, 0b0001, 0b0010, 0b0100,
                                         0b1000, 0b0011, 0b0101, 0b1001};
    for (const auto& [pattern, cls] : tables.quad_classes) {
        pass = pass && pattern == PatternOracle::quad(kQuadReps[cls]);
    }
    static constexpr int kGhz3Reps[4] = {0b000, 0b110, 0b010, 0b100};
    for (const auto& [pattern, cls] : tables.ghz3_groups) {
        pass = pass && pattern == PatternOracle::ghz3(kGhz3Reps[cls]);
    }
    return {7, "four-qubit analyzer exhaustive classification and grouping", pass, ""};
}

// --- criterion 8: decomposition identities ----------------------------------

CriterionResult check_decompositions() {
    auto report = analyzer::verify_decompositions(1e-12);
    double scale_dev = std::abs(report.ghz3_expansion_scale - kInvSqrt2);
    bool pass = report.pass && scale_dev <= 1e-12 &&
                report.quad_sign_flips ==
                    std::vector<std::string>{"quad:iii-", "quad:vi-"};
    return {8, "Bell-product decomposition identities", pass,
            fmt("scale 1/sqrt2 dev %.2e, max dev %.2e, %zu sign flips recorded", scale_dev,
                std::max(report.ghz3_max_deviation, report.quad_max_deviation),
                report.quad_sign_flips.size())};
}

// --- criterion 9: fermionic encoder -----------------------------------------

CriterionResult check_fermion_encoder() {
    auto report = fermion::verify_parity_povm(1000, 2024);
    bool pass = report.max_prob_dev <= 1e-10 && report.max_state_dev <= 1e-10 &&
                report.phase_sweep_pass;
    return {9, "fermionic encoder equals the even-parity gadget", pass,
            fmt("prob dev %.2e, state dev %.2e, sweep %s", report.max_prob_dev,
                report.max_state_dev, report.phase_sweep_pass ? "pass" : "fail")};
}

// --- criterion 10: measurement statistics -----------------------------------

CriterionResult check_measurement_statistics() {
    double worst = 0.0;
    DeterministicRng rng(771);
    for (auto family : {analyzer::Family::Bell, analyzer::Family::GHZ3, analyzer::Family::Quad}) {
        auto tree = family == analyzer::Family::Bell   ? analyzer::bell_analyzer()
                    : family == analyzer::Family::GHZ3 ? analyzer::ghz3_analyzer()
                                                       : analyzer::quad_analyzer();
        auto labels = analyzer::family_labels(family);
        for (int trial = 0; trial < 100; ++trial) {
            StateVector input = random_state(analyzer::family_qubits(family), rng);
            auto report = analyzer::classify(tree, input, EnumerateMode{});
            std::map<std::string, double> distribution;
            for (const auto& branch : report.branches) {
                distribution[analyzer::to_string(branch.label)] += branch.probability;
            }
            for (const auto& label : labels) {
                double overlap = overlap_magnitude(analyzer::basis_state(label), input);
                double prob = distribution[analyzer::to_string(label)];
                worst = std::max(worst, std::abs(prob - overlap * overlap));
            }
        }
    }
    return {10, "label distributions equal squared overlaps", worst <= 1e-10,
            fmt("max dev %.2e", worst)};
}

}  // namespace

const double kChain2Amps[4] = {0.5, 0.5, 0.5, -0.5};
const double kChain4Amps[16] = {0.25, 0.25, 0.25, -0.25, 0.25, 0.25, -0.25, 0.25,
                                0.25, 0.25, 0.25, -0.25, -0.25, -0.25, 0.25, -0.25};

std::vector<CriterionResult> run_acceptance() {
    return {
        check_parity_collapse(),    check_golden_amplitudes(), check_stabilizers_and_scaling(),
        check_branch_determinism(), check_bell_analyzer(),     check_ghz3_analyzer(),
        check_quad_analyzer(),      check_decompositions(),    check_fermion_encoder(),
        check_measurement_statistics(),
    };
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace psim::selftest
