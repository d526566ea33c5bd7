#include "paritysim/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace psim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Amplitudes of the even (sign +) or odd (sign -) projection.
std::vector<Amplitude> project_parity(const StateVector& s, std::uint64_t mask_a,
                                      std::uint64_t mask_b, ParityBasis basis, int value) {
    std::vector<Amplitude> out(s.dim());
    if (basis == ParityBasis::Z) {
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            int parity = (static_cast<int>((i & mask_a) != 0) ^ static_cast<int>((i & mask_b) != 0));
            out[i] = (parity == (value == 1 ? 0 : 1)) ? s.amp(i) : Amplitude{0.0, 0.0};
        }
    } else {
        // (1 +- X(x)X)/2 acting on the pair: mixes i with i^(mask_a|mask_b).
        const std::uint64_t flip = mask_a | mask_b;
        const double sign = (value == 1) ? 1.0 : -1.0;
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            out[i] = 0.5 * (s.amp(i) + sign * s.amp(i ^ flip));
        }
    }
    return out;
}

double norm2(const std::vector<Amplitude>& amps) {
    double acc = 0.0;
    for (const auto& a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

void renormalize(std::vector<Amplitude>& amps, double probability) {
    const double scale = 1.0 / std::sqrt(probability);
    for (auto& a : amps) {
        a *= scale;
    }
}

}  // namespace

ParityProbabilities parity_probabilities(const StateVector& s, int qubit_a, int qubit_b,
                                         ParityBasis basis) {
    s.check_qubit(qubit_a);
    s.check_qubit(qubit_b);
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("parity check requires two distinct qubits");
    }
    double even = norm2(project_parity(s, s.mask_of(qubit_a), s.mask_of(qubit_b), basis, 1));
    return {even, 1.0 - even};
}

ParityResult parity_check(const StateVector& s, int qubit_a, int qubit_b, ParityBasis basis,
                          std::optional<int> forced) {
    auto probs = parity_probabilities(s, qubit_a, qubit_b, basis);
    int value;
    if (forced.has_value()) {
        if (*forced != 0 && *forced != 1) {
            throw std::invalid_argument("forced parity outcome must be 0 or 1");
        }
        value = *forced;
        double p = (value == 1) ? probs.even : probs.odd;
        if (p <= kEpsPrune) {
            throw std::invalid_argument("forced parity branch has vanishing probability");
        }
    } else {
        value = (probs.even >= probs.odd) ? 1 : 0;
    }
    double probability = (value == 1) ? probs.even : probs.odd;
    auto amps = project_parity(s, s.mask_of(qubit_a), s.mask_of(qubit_b), basis, value);
    renormalize(amps, probability);
    return {{value, basis}, probability, StateVector::raw(s.n_qubits(), std::move(amps))};
}

MeasureXResult measure_x(const StateVector& s, int qubit, std::optional<int> forced) {
    s.check_qubit(qubit);
    const int bit = s.bit_of(qubit);
    const std::uint64_t low_mask = (std::uint64_t{1} << bit) - 1;
    const std::uint64_t half = s.dim() >> 1;

    std::vector<Amplitude> plus(half), minus(half);
    for (std::uint64_t j = 0; j < half; ++j) {
        std::uint64_t i0 = ((j & ~low_mask) << 1) | (j & low_mask);
        std::uint64_t i1 = i0 | (std::uint64_t{1} << bit);
        plus[j] = kInvSqrt2 * (s.amp(i0) + s.amp(i1));
        minus[j] = kInvSqrt2 * (s.amp(i0) - s.amp(i1));
    }
    double p_plus = norm2(plus);
    double p_minus = 1.0 - p_plus;

    int click;
    if (forced.has_value()) {
        if (*forced != 0 && *forced != 1) {
            throw std::invalid_argument("forced click must be 0 (-) or 1 (+)");
        }
        click = *forced;
        double p = (click == 1) ? p_plus : p_minus;
        if (p <= kEpsPrune) {
            throw std::invalid_argument("forced measurement branch has vanishing probability");
        }
    } else {
        click = (p_plus >= p_minus) ? 1 : 0;
    }

    auto& amps = (click == 1) ? plus : minus;
    double probability = (click == 1) ? p_plus : p_minus;
    renormalize(amps, probability);
    return {click, probability, StateVector::raw(s.n_qubits() - 1, std::move(amps))};
}

}  // namespace psim
