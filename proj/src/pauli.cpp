#include "paritysim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace psim {

namespace {

struct PauliMasks {
    std::uint64_t flip = 0;   // X and Y positions
    std::uint64_t phase = 0;  // Z and Y positions
    int y_count = 0;
};

PauliMasks build_masks(const StateVector& s, const PauliString& p) {
    if (p.n_qubits != s.n_qubits()) {
        throw std::invalid_argument("Pauli string dimension does not match state");
    }
    PauliMasks m;
    for (int q = 1; q <= p.n_qubits; ++q) {
        switch (p.at(q)) {
        case Pauli::I:
            break;
        case Pauli::X:
            m.flip |= s.mask_of(q);
            break;
        case Pauli::Y:
            m.flip |= s.mask_of(q);
            m.phase |= s.mask_of(q);
            ++m.y_count;
            break;
        case Pauli::Z:
            m.phase |= s.mask_of(q);
            break;
        }
    }
    return m;
}

// i^k
Amplitude i_power(int k) {
    static const Amplitude table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString PauliString::identity(int n_qubits) {
    return {n_qubits, std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I), +1};
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
    return identity(n_qubits).set(qubit, p);
}

PauliString& PauliString::set(int qubit, Pauli p) {
    if (qubit < 1 || qubit > n_qubits) {
        throw std::invalid_argument("Pauli qubit index out of range");
    }
    ops[static_cast<std::size_t>(qubit) - 1] = p;
    return *this;
}

int PauliString::weight() const {
    int w = 0;
    for (Pauli p : ops) {
        w += (p != Pauli::I);
    }
    return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_qubits != other.n_qubits) {
        throw std::invalid_argument("Pauli string dimension mismatch");
    }
    int anti = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        Pauli a = ops[i];
        Pauli b = other.ops[i];
        if (a != Pauli::I && b != Pauli::I && a != b) {
            ++anti;
        }
    }
    return anti % 2 == 0;
}

std::string PauliString::str() const {
    std::string s(1, sign < 0 ? '-' : '+');
    for (Pauli p : ops) {
        s += pauli_char(p);
    }
    return s;
}

StateVector apply_pauli(const StateVector& s, const PauliString& p) {
    PauliMasks m = build_masks(s, p);
    Amplitude global = static_cast<double>(p.sign) * i_power(m.y_count);
    std::vector<Amplitude> out(s.dim());
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        double phase = (std::popcount(i & m.phase) % 2 == 0) ? 1.0 : -1.0;
        out[i ^ m.flip] = global * phase * s.amp(i);
    }
    return StateVector::raw(s.n_qubits(), std::move(out));
}

double expectation(const StateVector& s, const PauliString& p) {
    PauliMasks m = build_masks(s, p);
    Amplitude global = static_cast<double>(p.sign) * i_power(m.y_count);
    Amplitude acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        double phase = (std::popcount(i & m.phase) % 2 == 0) ? 1.0 : -1.0;
        acc += std::conj(s.amp(i ^ m.flip)) * (phase * s.amp(i));
    }
    acc *= global;
    return acc.real();
}

}  // namespace psim
