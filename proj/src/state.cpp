#include "paritysim/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace psim {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " out of range [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

}  // namespace

StateVector StateVector::plus_product(int n_qubits) {
    check_qubit_count(n_qubits);
    // 2^n is exact for n <= kMaxQubits, so this is the correctly rounded 2^(-n/2).
    double value = 1.0 / std::sqrt(std::pow(2.0, n_qubits));
    std::vector<Amplitude> amps(std::uint64_t{1} << n_qubits, Amplitude{value, 0.0});
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    std::vector<Amplitude> amps(std::uint64_t{1} << n_qubits, Amplitude{0.0, 0.0});
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Amplitude> amps) {
    check_qubit_count(n_qubits);
    if (amps.size() != (std::uint64_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    double norm2 = 0.0;
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kEpsNorm) {
        throw std::invalid_argument("amplitudes are not normalized (|norm^2 - 1| = " +
                                    std::to_string(std::abs(norm2 - 1.0)) + ")");
    }
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::raw(int n_qubits, std::vector<Amplitude> amps) {
    return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const {
    double norm2 = 0.0;
    for (const auto& a : amps_) {
        norm2 += std::norm(a);
    }
    return std::sqrt(norm2);
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 1 || qubit > n_qubits_) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range [1, " + std::to_string(n_qubits_) + "]");
    }
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("dimension mismatch in inner product");
    }
    Amplitude acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amp(i)) * b.amp(i);
    }
    return acc;
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
    return std::abs(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    return overlap_magnitude(a, b) >= 1.0 - tol;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    int n = a.n_qubits() + b.n_qubits();
    check_qubit_count(n);
    std::vector<Amplitude> amps(std::uint64_t{1} << n);
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        for (std::uint64_t j = 0; j < b.dim(); ++j) {
            amps[(i << b.n_qubits()) | j] = a.amp(i) * b.amp(j);
        }
    }
    return StateVector::raw(n, std::move(amps));
}

}  // namespace psim
