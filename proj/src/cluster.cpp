#include "paritysim/cluster.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

namespace psim::cluster {

namespace {

std::string pattern_of(const BranchRecord& branch) {
    std::string pattern;
    for (const auto& [label, value] : branch.outcomes) {
        pattern += static_cast<char>('0' + value);
    }
    return pattern;
}

}  // namespace

GraphSpec GraphSpec::chain(int n) {
    GraphSpec g{n, {}};
    for (int v = 1; v < n; ++v) {
        g.edges.emplace_back(v, v + 1);
    }
    g.validate();
    return g;
}

void GraphSpec::validate() const {
    if (n_vertices < 1 || n_vertices > kMaxQubits) {
        throw std::invalid_argument("graph vertex count out of range");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n_vertices || b < 1 || b > n_vertices) {
            throw std::invalid_argument("graph edge endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph has a self-loop");
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            throw std::invalid_argument("duplicate graph edge");
        }
    }
}

bool GraphSpec::is_chain() const {
    if (static_cast<int>(edges.size()) != n_vertices - 1) {
        return false;
    }
    for (int v = 1; v < n_vertices; ++v) {
        auto edge = std::pair<int, int>{v, v + 1};
        if (std::find(edges.begin(), edges.end(), edge) == edges.end()) {
            return false;
        }
    }
    return true;
}

std::vector<int> GraphSpec::neighbors(int vertex) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == vertex) {
            out.push_back(b);
        } else if (b == vertex) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PauliString> stabilizers_for(const GraphSpec& g) {
    g.validate();
    std::vector<PauliString> out;
    out.reserve(static_cast<std::size_t>(g.n_vertices));
    for (int v = 1; v <= g.n_vertices; ++v) {
        PauliString k = PauliString::single(g.n_vertices, v, Pauli::X);
        for (int b : g.neighbors(v)) {
            k.set(b, Pauli::Z);
        }
        out.push_back(std::move(k));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (!out[i].commutes_with(out[j])) {
                throw std::logic_error("stabilizer family does not commute");
            }
        }
    }
    return out;
}

StateVector canonical_cluster(const GraphSpec& g) {
    g.validate();
    StateVector s = StateVector::plus_product(g.n_vertices);
    std::vector<Amplitude> amps(s.amps().begin(), s.amps().end());
    for (auto [a, b] : g.edges) {
        const std::uint64_t both = s.mask_of(a) | s.mask_of(b);
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            if ((i & both) == both) {
                amps[i] = -amps[i];
            }
        }
    }
    return StateVector::raw(g.n_vertices, std::move(amps));
}

bool is_fresh_plus(const StateVector& s, int k, double tol) {
    const std::uint64_t mask = s.mask_of(k);
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & mask) {
            continue;
        }
        if (std::abs(s.amp(i) - s.amp(i | mask)) > tol) {
            return false;
        }
    }
    return true;
}

GadgetResult gadget(const StateVector& s, int j, int k, std::optional<int> forced) {
    assert(is_fresh_plus(s, k, 1e-9) && "gadget target qubit must enter fresh in |+>");
    auto r = parity_check(s, j, k, ParityBasis::Z, forced);
    StateVector state = std::move(r.state);
    if (r.outcome.value == 0) {
        state = apply_gate(state, GateSpec::x(), k);
    }
    state = apply_gate(state, GateSpec::h(), k);
    return {r.outcome, r.probability, std::move(state)};
}

CircuitSchedule chain_schedule(int n) {
    CircuitSchedule sched{n, {}};
    for (int j = 1; j < n; ++j) {
        std::string label = "P" + std::to_string(j);
        sched.items.push_back(ParityCheckOp{j, j + 1, ParityBasis::Z, label});
        sched.items.push_back(ConditionalPauliOp{{label, 0}, Pauli::X, j + 1});
        sched.items.push_back(UnitaryOp{GateSpec::h(), j + 1});
    }
    return sched;
}

CircuitSchedule chain_schedule_raw(int n) {
    CircuitSchedule sched{n, {}};
    for (int j = 1; j < n; ++j) {
        sched.items.push_back(ParityCheckOp{j, j + 1, ParityBasis::Z, "P" + std::to_string(j)});
        sched.items.push_back(UnitaryOp{GateSpec::h(), j + 1});
    }
    return sched;
}

std::vector<PreparationRecord> prepare_cluster(const GraphSpec& g, const RunMode& mode,
                                               double verify_tol) {
    g.validate();
    if (g.n_vertices < 2) {
        throw std::invalid_argument("cluster preparation needs at least 2 qubits");
    }
    if (!g.is_chain()) {
        throw std::invalid_argument("cluster preparation supports linear chains only");
    }
    const int n = g.n_vertices;
    auto branches = run_schedule(StateVector::plus_product(n), chain_schedule(n), mode);

    std::vector<PreparationRecord> records;
    records.reserve(branches.size());
    for (auto& branch : branches) {
        std::string outcomes = pattern_of(branch);
        std::vector<std::pair<Pauli, int>> corrections;
        for (int j = 1; j < n; ++j) {
            if (outcomes[static_cast<std::size_t>(j) - 1] == '0') {
                corrections.emplace_back(Pauli::X, j + 1);
            }
        }
        auto verification = verify_cluster(branch.final_state, g, verify_tol);
        records.push_back(PreparationRecord{n, std::move(outcomes), std::move(corrections),
                                            branch.probability, std::move(branch.final_state),
                                            std::move(verification.expectations),
                                            verification.pass});
    }
    return records;
}

namespace {

// All X/Z strings over n qubits ordered by weight, then lexicographically
// position by position with I < X < Z.
std::vector<std::vector<Pauli>> correction_candidates(int n) {
    std::vector<std::vector<Pauli>> all;
    std::vector<Pauli> current(static_cast<std::size_t>(n), Pauli::I);
    const Pauli alphabet[3] = {Pauli::I, Pauli::X, Pauli::Z};
    // 3^n strings, generated in lexicographic order.
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int i = 0; i < n; ++i) {
            current[static_cast<std::size_t>(i)] = alphabet[digits[static_cast<std::size_t>(i)]];
        }
        all.push_back(current);
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 2) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++digits[static_cast<std::size_t>(pos)];
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<Pauli>& a, const std::vector<Pauli>& b) {
                         int wa = 0, wb = 0;
                         for (Pauli p : a) wa += (p != Pauli::I);
                         for (Pauli p : b) wb += (p != Pauli::I);
                         return wa < wb;
                     });
    return all;
}

PauliString to_pauli_string(const std::vector<Pauli>& ops) {
    PauliString p = PauliString::identity(static_cast<int>(ops.size()));
    p.ops = ops;
    return p;
}

std::vector<std::pair<Pauli, int>> to_pairs(const std::vector<Pauli>& ops) {
    std::vector<std::pair<Pauli, int>> out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i] != Pauli::I) {
            out.emplace_back(ops[i], static_cast<int>(i) + 1);
        }
    }
    return out;
}

}  // namespace

CorrectionTable derive_correction_table(int n) {
    if (n < 2 || n > kMaxCorrectionTableQubits) {
        throw std::invalid_argument("correction table supported for 2..6 qubits");
    }
    const GraphSpec g = GraphSpec::chain(n);
    const StateVector target = canonical_cluster(g);
    const CircuitSchedule raw = chain_schedule_raw(n);
    const auto candidates = correction_candidates(n);
    const double tol = 1e-10;

    CorrectionTable table{n, {}, false};
    auto branches = run_schedule(StateVector::plus_product(n), raw, EnumerateMode{});
    for (const auto& branch : branches) {
        bool found = false;
        for (const auto& ops : candidates) {
            StateVector corrected = apply_pauli(branch.final_state, to_pauli_string(ops));
            if (equal_up_to_global_phase(corrected, target, tol)) {
                table.rules.push_back({pattern_of(branch), to_pairs(ops)});
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("no Pauli correction found for pattern " + pattern_of(branch));
        }
    }

    // Re-simulate each forced pattern independently and confirm its rule.
    bool verified = true;
    for (const auto& rule : table.rules) {
        auto forced = run_schedule(StateVector::plus_product(n), raw, ForcedMode{rule.pattern});
        PauliString correction = PauliString::identity(n);
        for (auto [p, q] : rule.paulis) {
            correction.set(q, p);
        }
        StateVector corrected = apply_pauli(forced.at(0).final_state, correction);
        verified = verified && equal_up_to_global_phase(corrected, target, tol);
    }
    table.verified = verified;
    return table;
}

ClusterVerification verify_cluster(const StateVector& s, const GraphSpec& g, double tol) {
    if (s.n_qubits() != g.n_vertices) {
        throw std::invalid_argument("state size does not match graph");
    }
    ClusterVerification result{{}, true};
    for (const PauliString& k : stabilizers_for(g)) {
        double e = expectation(s, k);
        result.expectations.push_back(e);
        result.pass = result.pass && std::abs(e - 1.0) <= tol;
    }
    return result;
}

}  // namespace psim::cluster
