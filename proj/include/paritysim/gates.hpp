#pragma once

#include <array>

#include "paritysim/state.hpp"

namespace psim {

using Mat2 = std::array<std::array<Amplitude, 2>, 2>;

enum class GateKind { H, X, Z, S, RotX, RotZ, Custom };

/// Single-qubit gate. H follows the real convention H|0> = |+>, H|1> = |->.
struct GateSpec {
    GateKind kind;
    Mat2 matrix;

    static GateSpec h();
    static GateSpec x();
    static GateSpec z();
    static GateSpec s();
    static GateSpec rot_x(double theta);
    static GateSpec rot_z(double theta);
    // Throws std::invalid_argument if the matrix is not unitary within kEpsNorm.
    static GateSpec custom(const Mat2& m);
};

bool is_unitary(const Mat2& m, double tol);

StateVector apply_gate(const StateVector& s, const GateSpec& g, int qubit);

}  // namespace psim
