#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace psim {

using Amplitude = std::complex<double>;

// Norm / pruning tolerances shared across the library.
inline constexpr double kEpsNorm = 1e-12;
inline constexpr double kEpsPrune = 1e-12;
inline constexpr int kMaxQubits = 16;

/// Dense normalized amplitude vector over n qubits.
///
/// Qubit numbering is 1-based and qubit 1 is the most significant bit of the
/// basis index, so |q1 q2 ... qn> reads left to right like a ket.
class StateVector {
  public:
    static StateVector plus_product(int n_qubits);
    static StateVector basis_state(int n_qubits, std::uint64_t index);
    // Validates normalization within kEpsNorm (no silent renormalization).
    static StateVector from_amplitudes(int n_qubits, std::vector<Amplitude> amps);
    // Skips the norm check; for internal construction of projected states.
    static StateVector raw(int n_qubits, std::vector<Amplitude> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const Amplitude& amp(std::uint64_t i) const { return amps_[i]; }
    std::span<const Amplitude> amps() const { return amps_; }
    double norm() const;

    // Bit position (from LSB) of 1-based qubit q.
    int bit_of(int qubit) const { return n_qubits_ - qubit; }
    std::uint64_t mask_of(int qubit) const { return std::uint64_t{1} << bit_of(qubit); }
    void check_qubit(int qubit) const;

    bool operator==(const StateVector&) const = default;

  private:
    StateVector(int n_qubits, std::vector<Amplitude> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<Amplitude> amps_;
};

// <a|b>; dimensions must match.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|
double overlap_magnitude(const StateVector& a, const StateVector& b);

// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

// Kronecker product; qubits of `a` become the leading (most significant) ones.
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace psim
