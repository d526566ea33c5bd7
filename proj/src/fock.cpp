#include "paritysim/fock.hpp"

#include <cmath>
#include <string>

#include "paritysim/measure.hpp"
#include "paritysim/rng.hpp"

namespace psim::fermion {

namespace {

int arm_occupancy(const ModePair& pair, Arm arm) {
    auto in_arm = [arm](int mode) {
        return arm == Arm::APrime ? mode < 2 : mode >= 2;
    };
    return static_cast<int>(in_arm(pair.lo)) + static_cast<int>(in_arm(pair.hi));
}

}  // namespace

int pair_index(int lo, int hi) {
    for (std::size_t i = 0; i < kPairBasis.size(); ++i) {
        if (kPairBasis[i].lo == lo && kPairBasis[i].hi == hi) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("not a canonical mode pair");
}

double FockState::norm() const {
    double acc = 0.0;
    for (const auto& a : amps) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

bool is_unitary(const ScatteringMatrix& u, double tol) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Amplitude dot{0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                dot += std::conj(u[k][i]) * u[k][j];
            }
            Amplitude expect = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(dot - expect) > tol) {
                return false;
            }
        }
    }
    return true;
}

FockState embed_spin_state(const StateVector& spin) {
    if (spin.n_qubits() != 2) {
        throw std::invalid_argument("encoder input must be a two-qubit state");
    }
    FockState f;
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            f.amps[static_cast<std::size_t>(pair_index(s1, 2 + s2))] =
                spin.amp(static_cast<std::uint64_t>(s1 * 2 + s2));
        }
    }
    return f;
}

ScatteringMatrix pbs_matrix(Amplitude reflection_phase) {
    if (std::abs(std::abs(reflection_phase) - 1.0) > kEpsNorm) {
        throw std::invalid_argument("reflection phase must have unit magnitude");
    }
    ScatteringMatrix u{};
    u[kAUp][kAUp] = 1.0;
    u[kBUp][kBUp] = 1.0;
    u[kBDown][kADown] = reflection_phase;
    u[kADown][kBDown] = -std::conj(reflection_phase);
    return u;
}

ScatteringMatrix corrupt_pbs(double mixing_angle) {
    ScatteringMatrix u = pbs_matrix();
    double c = std::cos(mixing_angle);
    double s = std::sin(mixing_angle);
    u[kBDown][kADown] = c;
    u[kADown][kADown] = s;
    u[kADown][kBDown] = -c;
    u[kBDown][kBDown] = s;
    return u;
}

FockState apply_scattering(const FockState& f, const ScatteringMatrix& u) {
    if (!is_unitary(u, kEpsNorm)) {
        throw std::invalid_argument("scattering matrix is not unitary");
    }
    FockState out;
    for (std::size_t in = 0; in < kPairBasis.size(); ++in) {
        if (f.amps[in] == Amplitude{0.0, 0.0}) {
            continue;
        }
        const auto [i, j] = kPairBasis[in];
        for (std::size_t to = 0; to < kPairBasis.size(); ++to) {
            const auto [k, l] = kPairBasis[to];
            // c^dag_i c^dag_j -> sum over k<l of (u_ki u_lj - u_li u_kj).
            Amplitude minor = u[k][i] * u[l][j] - u[l][i] * u[k][j];
            out.amps[to] += minor * f.amps[in];
        }
    }
    return out;
}

ChargeResult detect_charge(const FockState& f, Arm arm, std::optional<Charge> forced) {
    double p_one = 0.0;
    for (std::size_t i = 0; i < kPairBasis.size(); ++i) {
        if (arm_occupancy(kPairBasis[i], arm) == 1) {
            p_one += std::norm(f.amps[i]);
        }
    }
    double p_other = 1.0 - p_one;

    Charge value;
    if (forced.has_value()) {
        value = *forced;
        double p = (value == Charge::One) ? p_one : p_other;
        if (p <= kEpsPrune) {
            throw std::invalid_argument("forced charge outcome has vanishing probability");
        }
    } else {
        value = (p_one >= p_other) ? Charge::One : Charge::ZeroOrTwo;
    }

    double probability = (value == Charge::One) ? p_one : p_other;
    FockState projected;
    double scale = 1.0 / std::sqrt(probability);
    for (std::size_t i = 0; i < kPairBasis.size(); ++i) {
        bool keep = (arm_occupancy(kPairBasis[i], arm) == 1) == (value == Charge::One);
        projected.amps[i] = keep ? scale * f.amps[i] : Amplitude{0.0, 0.0};
    }
    return {{value, arm}, probability, projected};
}

StateVector reduce_to_spin(const FockState& f) {
    for (std::size_t i = 0; i < kPairBasis.size(); ++i) {
        if (arm_occupancy(kPairBasis[i], Arm::APrime) != 1 &&
            std::norm(f.amps[i]) > kEpsPrune) {
            throw bunched_error();
        }
    }
    std::vector<Amplitude> amps(4);
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            amps[static_cast<std::size_t>(s1 * 2 + s2)] =
                f.amps[static_cast<std::size_t>(pair_index(s1, 2 + s2))];
        }
    }
    return StateVector::raw(2, std::move(amps));
}

namespace {

struct Deviation {
    double prob = 0.0;
    double state = 0.0;
};

Deviation compare_to_qubit_gadget(const StateVector& spin, const ScatteringMatrix& u) {
    FockState scattered = apply_scattering(embed_spin_state(spin), u);
    double p_one = 0.0;
    for (std::size_t i = 0; i < kPairBasis.size(); ++i) {
        if (arm_occupancy(kPairBasis[i], Arm::APrime) == 1) {
            p_one += std::norm(scattered.amps[i]);
        }
    }
    auto qubit_probs = parity_probabilities(spin, 1, 2, ParityBasis::Z);

    Deviation dev;
    dev.prob = std::abs(p_one - qubit_probs.even);
    if (qubit_probs.even > 1e-6) {
        auto charge = detect_charge(scattered, Arm::APrime, Charge::One);
        StateVector fermionic = reduce_to_spin(charge.state);
        StateVector qubit = parity_check(spin, 1, 2, ParityBasis::Z, 1).state;
        dev.state = 1.0 - overlap_magnitude(fermionic, qubit);
    }
    return dev;
}

}  // namespace

PovmReport verify_parity_povm(int samples, std::uint64_t seed, double tol,
                              const ScatteringMatrix* scattering_override) {
    if (samples < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    ScatteringMatrix u = scattering_override ? *scattering_override : pbs_matrix();

    std::vector<StateVector> inputs;
    for (std::uint64_t b = 0; b < 4; ++b) {
        inputs.push_back(StateVector::basis_state(2, b));
    }
    DeterministicRng rng(seed);
    for (int i = 0; i < samples; ++i) {
        inputs.push_back(random_state(2, rng));
    }

    PovmReport report{samples, 0.0, 0.0, true};
    for (const auto& spin : inputs) {
        Deviation dev = compare_to_qubit_gadget(spin, u);
        report.max_prob_dev = std::max(report.max_prob_dev, dev.prob);
        report.max_state_dev = std::max(report.max_state_dev, dev.state);
    }

    if (!scattering_override) {
        const Amplitude phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (const Amplitude& phase : phases) {
            ScatteringMatrix swept = pbs_matrix(phase);
            for (const auto& spin : inputs) {
                Deviation dev = compare_to_qubit_gadget(spin, swept);
                if (dev.prob > tol || dev.state > tol) {
                    report.phase_sweep_pass = false;
                }
            }
        }
    }
    return report;
}

}  // namespace psim::fermion
