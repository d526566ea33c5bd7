#pragma once

#include <string>
#include <vector>

#include "paritysim/state.hpp"

namespace psim {

enum class Pauli { I, X, Y, Z };

char pauli_char(Pauli p);

/// Signed tensor product of single-qubit Paulis, e.g. +Z1 X2 Z3.
struct PauliString {
    int n_qubits;
    std::vector<Pauli> ops;  // ops[q-1] acts on qubit q
    int sign = +1;

    static PauliString identity(int n_qubits);
    static PauliString single(int n_qubits, int qubit, Pauli p);

    PauliString& set(int qubit, Pauli p);
    Pauli at(int qubit) const { return ops[static_cast<std::size_t>(qubit) - 1]; }
    int weight() const;

    // Symplectic criterion: odd number of anticommuting positions.
    bool commutes_with(const PauliString& other) const;

    std::string str() const;  // e.g. "+ZXZI"
};

StateVector apply_pauli(const StateVector& s, const PauliString& p);

/// <s|p|s>. Real for any signed Pauli string since those are Hermitian.
double expectation(const StateVector& s, const PauliString& p);

}  // namespace psim
