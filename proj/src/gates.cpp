#include "paritysim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace psim {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

GateSpec GateSpec::h() {
    return {GateKind::H, {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}}};
}

GateSpec GateSpec::x() {
    return {GateKind::X, {{{0.0, 1.0}, {1.0, 0.0}}}};
}

GateSpec GateSpec::z() {
    return {GateKind::Z, {{{1.0, 0.0}, {0.0, -1.0}}}};
}

GateSpec GateSpec::s() {
    return {GateKind::S, {{{1.0, 0.0}, {0.0, Amplitude{0.0, 1.0}}}}};
}

GateSpec GateSpec::rot_x(double theta) {
    double c = std::cos(theta / 2.0);
    Amplitude ms{0.0, -std::sin(theta / 2.0)};
    return {GateKind::RotX, {{{c, ms}, {ms, c}}}};
}

GateSpec GateSpec::rot_z(double theta) {
    Amplitude lo = std::exp(Amplitude{0.0, -theta / 2.0});
    Amplitude hi = std::exp(Amplitude{0.0, theta / 2.0});
    return {GateKind::RotZ, {{{lo, 0.0}, {0.0, hi}}}};
}

GateSpec GateSpec::custom(const Mat2& m) {
    if (!is_unitary(m, kEpsNorm)) {
        throw std::invalid_argument("custom gate matrix is not unitary");
    }
    return {GateKind::Custom, m};
}

bool is_unitary(const Mat2& m, double tol) {
    // U^dagger U == I entrywise.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Amplitude dot{0.0, 0.0};
            for (int k = 0; k < 2; ++k) {
                dot += std::conj(m[k][i]) * m[k][j];
            }
            Amplitude expect = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(dot - expect) > tol) {
                return false;
            }
        }
    }
    return true;
}

StateVector apply_gate(const StateVector& s, const GateSpec& g, int qubit) {
    s.check_qubit(qubit);
    if (g.kind == GateKind::Custom && !is_unitary(g.matrix, kEpsNorm)) {
        throw std::invalid_argument("custom gate matrix is not unitary");
    }
    const std::uint64_t mask = s.mask_of(qubit);
    std::vector<Amplitude> out(s.amps().begin(), s.amps().end());
    const auto& u = g.matrix;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & mask) {
            continue;
        }
        Amplitude a0 = out[i];
        Amplitude a1 = out[i | mask];
        out[i] = u[0][0] * a0 + u[0][1] * a1;
        out[i | mask] = u[1][0] * a0 + u[1][1] * a1;
    }
    return StateVector::raw(s.n_qubits(), std::move(out));
}

}  // namespace psim
