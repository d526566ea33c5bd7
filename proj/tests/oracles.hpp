#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "paritysim/pauli.hpp"
#include "paritysim/rng.hpp"
#include "paritysim/state.hpp"

namespace oracles {

using psim::Amplitude;
using psim::StateVector;

// CZ on (a, b) applied amplitude-wise: minus sign where both bits are set.
inline StateVector apply_cz(const StateVector& s, int a, int b) {
    std::vector<Amplitude> amps(s.amps().begin(), s.amps().end());
    const std::uint64_t both = s.mask_of(a) | s.mask_of(b);
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
    return StateVector::raw(s.n_qubits(), std::move(amps));
}

// Linear chain cluster built purely from CZ phases on |+...+>.
inline StateVector chain_cluster(int n) {
    StateVector s = StateVector::plus_product(n);
    for (int j = 1; j < n; ++j) {
        s = apply_cz(s, j, j + 1);
    }
    return s;
}

// Dense matrix of a Pauli string, built column by column from single-qubit
// 2x2 blocks; used to cross-check expectation values.
inline std::vector<std::vector<Amplitude>> pauli_matrix(const psim::PauliString& p) {
    const std::uint64_t dim = std::uint64_t{1} << p.n_qubits;
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim, Amplitude{0, 0}));
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::uint64_t row = col;
        Amplitude coeff = static_cast<double>(p.sign);
        for (int q = 1; q <= p.n_qubits; ++q) {
            const std::uint64_t mask = std::uint64_t{1} << (p.n_qubits - q);
            const int bit = (col & mask) ? 1 : 0;
            switch (p.at(q)) {
            case psim::Pauli::I:
                break;
            case psim::Pauli::X:
                row ^= mask;
                break;
            case psim::Pauli::Y:
                row ^= mask;
                coeff *= Amplitude{0.0, bit ? -1.0 : 1.0};
                break;
            case psim::Pauli::Z:
                coeff *= bit ? -1.0 : 1.0;
                break;
            }
        }
        m[row][col] = coeff;
    }
    return m;
}

inline Amplitude matrix_expectation(const StateVector& s, const psim::PauliString& p) {
    auto m = pauli_matrix(p);
    Amplitude acc{0, 0};
    for (std::uint64_t r = 0; r < s.dim(); ++r) {
        for (std::uint64_t c = 0; c < s.dim(); ++c) {
            acc += std::conj(s.amp(r)) * m[r][c] * s.amp(c);
        }
    }
    return acc;
}

// Gram-Schmidt on Gaussian columns; small Haar-like random unitary.
template <int N>
inline std::array<std::array<Amplitude, N>, N> random_unitary(psim::DeterministicRng& rng) {
    std::array<std::array<Amplitude, N>, N> cols{};
    for (int c = 0; c < N; ++c) {
        for (int r = 0; r < N; ++r) {
            cols[c][r] = rng.complex_gaussian();
        }
        for (int prev = 0; prev < c; ++prev) {
            Amplitude dot{0, 0};
            for (int r = 0; r < N; ++r) {
                dot += std::conj(cols[prev][r]) * cols[c][r];
            }
            for (int r = 0; r < N; ++r) {
                cols[c][r] -= dot * cols[prev][r];
            }
        }
        double norm = 0.0;
        for (int r = 0; r < N; ++r) {
            norm += std::norm(cols[c][r]);
        }
        norm = std::sqrt(norm);
        for (int r = 0; r < N; ++r) {
            cols[c][r] /= norm;
        }
    }
    std::array<std::array<Amplitude, N>, N> u{};
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            u[r][c] = cols[c][r];
        }
    }
    return u;
}

}  // namespace oracles
