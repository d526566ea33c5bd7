#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "paritysim/state.hpp"

namespace psim::fermion {

/// Single-particle modes in canonical order; the same slots describe the
/// primed output modes after scattering. Spin up encodes logical |0>, down
/// encodes |1>.
enum Mode : int { kAUp = 0, kADown = 1, kBUp = 2, kBDown = 3 };

/// The six antisymmetric two-electron basis states, as mode pairs (lo < hi)
/// in lexicographic order. All amplitude signs are relative to the operator
/// order c^dag_lo c^dag_hi |vac>.
struct ModePair {
    int lo;
    int hi;
};

inline constexpr std::array<ModePair, 6> kPairBasis = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int lo, int hi);

/// Two-electron state over the antisymmetric pair basis.
struct FockState {
    std::array<Amplitude, 6> amps{};

    double norm() const;
};

using ScatteringMatrix = std::array<std::array<Amplitude, 4>, 4>;

bool is_unitary(const ScatteringMatrix& u, double tol);

/// Electron 1 travels path A, electron 2 path B: |s1 s2> maps onto
/// c^dag_{A,s1} c^dag_{B,s2} |vac>. A modes precede B modes, so no
/// reordering signs appear.
FockState embed_spin_state(const StateVector& spin);

/// Polarizing beam splitter: spin up is transmitted (A->A', B->B'), spin down
/// reflected across arms. The two reflection amplitudes are r and -conj(r),
/// the standard lossless convention; with both equal to a bare +1 the matrix
/// is still unitary but the doubly reflected two-electron component acquires
/// the exchange minus sign and the device no longer realizes the even-parity
/// projector.
ScatteringMatrix pbs_matrix(Amplitude reflection_phase = Amplitude{1.0, 0.0});

/// Unitary but wrong routing (down spins leak into the transmitted arm);
/// negative-control hook for the parity verification.
ScatteringMatrix corrupt_pbs(double mixing_angle);

/// Lifts the single-particle unitary to the two-electron space via 2x2
/// minors, keeping canonical antisymmetrization signs.
FockState apply_scattering(const FockState& f, const ScatteringMatrix& u);

enum class Arm { APrime, BPrime };
enum class Charge { One, ZeroOrTwo };

struct ChargeOutcome {
    Charge value;
    Arm arm;
};

struct ChargeResult {
    ChargeOutcome outcome;
    double probability;
    FockState state;
};

/// Projects onto basis states with exactly one electron in `arm` (One) or its
/// complement (ZeroOrTwo) and renormalizes. Unforced returns the more
/// probable outcome, ties to One.
ChargeResult detect_charge(const FockState& f, Arm arm,
                           std::optional<Charge> forced = std::nullopt);

/// Raised when a state to be read out as two dual-rail qubits has support on
/// a doubly occupied arm.
class bunched_error : public std::runtime_error {
  public:
    bunched_error() : std::runtime_error("state has support on a doubly occupied arm") {}
};

/// Reads the one-electron-per-arm sector back as a two-qubit spin state:
/// qubit 1 is the A' electron spin, qubit 2 the B' spin.
StateVector reduce_to_spin(const FockState& f);

struct PovmReport {
    int samples;
    double max_prob_dev;
    double max_state_dev;
    bool phase_sweep_pass;
};

/// Checks, over the four spin basis states and `samples` random states, that
/// scattering plus charge detection reproduces the qubit-level even-parity
/// branch: P(One) against the even-parity probability and the post-One spin
/// state against the collapsed state up to global phase. The sweep reruns the
/// comparison with reflection phases {1, i, -1, -i}.
PovmReport verify_parity_povm(int samples, std::uint64_t seed, double tol = 1e-10,
                              const ScatteringMatrix* scattering_override = nullptr);

}  // namespace psim::fermion
