#pragma once

#include <cstdint>
#include <random>

#include "paritysim/state.hpp"

namespace psim {

/// mt19937_64 with explicit bit-to-double mapping so sequences are identical
/// across standard library implementations.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    // Box-Muller, one value per call.
    double gaussian();

    Amplitude complex_gaussian() { return {gaussian(), gaussian()}; }

  private:
    std::mt19937_64 engine_;
};

/// Haar-like random state: normalized vector of complex Gaussians.
StateVector random_state(int n_qubits, DeterministicRng& rng);

}  // namespace psim
