#include "paritysim/rng.hpp"

#include <cmath>
#include <numbers>

namespace psim {

double DeterministicRng::gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

StateVector random_state(int n_qubits, DeterministicRng& rng) {
    std::vector<Amplitude> amps(std::uint64_t{1} << n_qubits);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = rng.complex_gaussian();
        norm2 += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) {
        a *= scale;
    }
    return StateVector::raw(n_qubits, std::move(amps));
}

}  // namespace psim
