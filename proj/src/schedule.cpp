#include "paritysim/schedule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "paritysim/rng.hpp"

namespace psim {

namespace {

void check_index(int qubit, int n) {
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("schedule references qubit " + std::to_string(qubit) +
                                    " outside register of size " + std::to_string(n));
    }
}

// Tracks original-index -> live-position mapping across destructive measurements.
struct Tracker {
    std::vector<int> position;  // position[orig-1], 1-based; -1 once measured

    explicit Tracker(int n) : position(static_cast<std::size_t>(n)) {
        for (int q = 1; q <= n; ++q) {
            position[static_cast<std::size_t>(q) - 1] = q;
        }
    }

    int live(int orig) const {
        int p = position[static_cast<std::size_t>(orig) - 1];
        if (p < 0) {
            throw std::logic_error("instruction references destructively measured qubit " +
                                   std::to_string(orig));
        }
        return p;
    }

    void remove(int orig) {
        int gone = live(orig);
        position[static_cast<std::size_t>(orig) - 1] = -1;
        for (auto& p : position) {
            if (p > gone) {
                --p;
            }
        }
    }
};

struct Runner {
    const CircuitSchedule& sched;
    double prune_eps;
    std::vector<BranchRecord> branches;
    DeterministicRng* rng = nullptr;         // sample mode
    const std::string* pattern = nullptr;    // forced mode

    void run(const StateVector& state, std::size_t item, Tracker tracker, OutcomeList outcomes,
             std::vector<int> measured, double probability, std::size_t pattern_pos) {
        for (; item < sched.items.size(); ++item) {
            const Instruction& ins = sched.items[item];
            if (const auto* u = std::get_if<UnitaryOp>(&ins)) {
                StateVector next = apply_gate(state, u->gate, tracker.live(u->qubit));
                return run(next, item + 1, std::move(tracker), std::move(outcomes),
                           std::move(measured), probability, pattern_pos);
            }
            if (const auto* c = std::get_if<ConditionalPauliOp>(&ins)) {
                if (outcome_value(outcomes, c->when.label) == c->when.equals) {
                    GateSpec g = (c->pauli == Pauli::X) ? GateSpec::x() : GateSpec::z();
                    StateVector next = apply_gate(state, g, tracker.live(c->qubit));
                    return run(next, item + 1, std::move(tracker), std::move(outcomes),
                               std::move(measured), probability, pattern_pos);
                }
                continue;
            }
            if (const auto* pc = std::get_if<ParityCheckOp>(&ins)) {
                int a = tracker.live(pc->qubit_a);
                int b = tracker.live(pc->qubit_b);
                for (int value : branch_values(state, a, b, pc->basis, pattern_pos)) {
                    auto r = parity_check(state, a, b, pc->basis, value);
                    OutcomeList next_outcomes = outcomes;
                    next_outcomes.emplace_back(pc->label, value);
                    run(r.state, item + 1, tracker, std::move(next_outcomes), measured,
                        probability * r.probability, pattern_pos + 1);
                }
                return;
            }
            const auto& mx = std::get<MeasureXOp>(ins);
            int q = tracker.live(mx.qubit);
            for (int click : click_values(state, q, pattern_pos)) {
                auto r = measure_x(state, q, click);
                Tracker next_tracker = tracker;
                next_tracker.remove(mx.qubit);
                OutcomeList next_outcomes = outcomes;
                next_outcomes.emplace_back(mx.label, click);
                std::vector<int> next_measured = measured;
                next_measured.push_back(mx.qubit);
                run(r.state, item + 1, std::move(next_tracker), std::move(next_outcomes),
                    std::move(next_measured), probability * r.probability, pattern_pos + 1);
            }
            return;
        }
        branches.push_back({std::move(outcomes), probability, state, std::move(measured)});
    }

    // Which outcomes to explore at a parity split, canonical order 1 then 0.
    std::vector<int> branch_values(const StateVector& state, int a, int b, ParityBasis basis,
                                   std::size_t pattern_pos) {
        auto probs = parity_probabilities(state, a, b, basis);
        return pick(probs.even, probs.odd, pattern_pos);
    }

    std::vector<int> click_values(const StateVector& state, int q, std::size_t pattern_pos) {
        double p_plus = measure_x_probability(state, q);
        return pick(p_plus, 1.0 - p_plus, pattern_pos);
    }

    static double measure_x_probability(const StateVector& state, int q) {
        const int bit = state.bit_of(q);
        const std::uint64_t low_mask = (std::uint64_t{1} << bit) - 1;
        double acc = 0.0;
        for (std::uint64_t j = 0; j < state.dim() >> 1; ++j) {
            std::uint64_t i0 = ((j & ~low_mask) << 1) | (j & low_mask);
            std::uint64_t i1 = i0 | (std::uint64_t{1} << bit);
            acc += 0.5 * std::norm(state.amp(i0) + state.amp(i1));
        }
        return acc;
    }

    std::vector<int> pick(double p_one, double p_zero, std::size_t pattern_pos) {
        if (pattern) {
            if (pattern_pos >= pattern->size()) {
                throw std::invalid_argument("forced pattern shorter than measurement count");
            }
            char c = (*pattern)[pattern_pos];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("forced pattern must consist of '0'/'1'");
            }
            int value = c - '0';
            if ((value == 1 ? p_one : p_zero) <= prune_eps) {
                throw std::invalid_argument("forced branch has vanishing probability");
            }
            return {value};
        }
        if (rng) {
            double u = rng->uniform();
            if (p_one <= prune_eps) {
                return {0};
            }
            if (p_zero <= prune_eps) {
                return {1};
            }
            return {u < p_one ? 1 : 0};
        }
        std::vector<int> values;
        if (p_one > prune_eps) {
            values.push_back(1);
        }
        if (p_zero > prune_eps) {
            values.push_back(0);
        }
        return values;
    }
};

}  // namespace

void CircuitSchedule::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("schedule register size out of range");
    }
    std::set<std::string> labels;
    for (const Instruction& ins : items) {
        if (const auto* u = std::get_if<UnitaryOp>(&ins)) {
            check_index(u->qubit, n_qubits);
        } else if (const auto* pc = std::get_if<ParityCheckOp>(&ins)) {
            check_index(pc->qubit_a, n_qubits);
            check_index(pc->qubit_b, n_qubits);
            if (pc->qubit_a == pc->qubit_b) {
                throw std::invalid_argument("parity check on a single qubit");
            }
            if (!labels.insert(pc->label).second) {
                throw std::invalid_argument("duplicate detector label " + pc->label);
            }
        } else if (const auto* mx = std::get_if<MeasureXOp>(&ins)) {
            check_index(mx->qubit, n_qubits);
            if (!labels.insert(mx->label).second) {
                throw std::invalid_argument("duplicate click label " + mx->label);
            }
        } else {
            const auto& c = std::get<ConditionalPauliOp>(ins);
            check_index(c.qubit, n_qubits);
            if (c.pauli != Pauli::X && c.pauli != Pauli::Z) {
                throw std::invalid_argument("conditional Pauli must be X or Z");
            }
            if (c.when.equals != 0 && c.when.equals != 1) {
                throw std::invalid_argument("condition value must be 0 or 1");
            }
            if (labels.find(c.when.label) == labels.end()) {
                throw std::invalid_argument("condition references unknown or later label " +
                                            c.when.label);
            }
        }
    }
}

std::vector<std::string> CircuitSchedule::outcome_labels() const {
    std::vector<std::string> labels;
    for (const Instruction& ins : items) {
        if (const auto* pc = std::get_if<ParityCheckOp>(&ins)) {
            labels.push_back(pc->label);
        } else if (const auto* mx = std::get_if<MeasureXOp>(&ins)) {
            labels.push_back(mx->label);
        }
    }
    return labels;
}

int outcome_value(const OutcomeList& outcomes, std::string_view label) {
    for (const auto& [key, value] : outcomes) {
        if (key == label) {
            return value;
        }
    }
    throw std::invalid_argument("no outcome recorded for label " + std::string(label));
}

std::vector<BranchRecord> run_schedule(const StateVector& s, const CircuitSchedule& sched,
                                       const RunMode& mode, double prune_eps) {
    sched.validate();
    if (s.n_qubits() != sched.n_qubits) {
        throw std::invalid_argument("state size does not match schedule register");
    }

    Runner runner{sched, prune_eps, {}, nullptr, nullptr};
    DeterministicRng rng{0};
    if (const auto* sample = std::get_if<SampleMode>(&mode)) {
        rng = DeterministicRng(sample->seed);
        runner.rng = &rng;
    } else if (const auto* forced = std::get_if<ForcedMode>(&mode)) {
        std::size_t n_measure = sched.outcome_labels().size();
        if (forced->pattern.size() != n_measure) {
            throw std::invalid_argument("forced pattern length " +
                                        std::to_string(forced->pattern.size()) +
                                        " does not match measurement count " +
                                        std::to_string(n_measure));
        }
        runner.pattern = &forced->pattern;
    }

    runner.run(s, 0, Tracker(sched.n_qubits), {}, {}, 1.0, 0);
    return runner.branches;
}

}  // namespace psim
