#include "qca/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qca {

StateVector StateVector::zero(int n) {
    if (n < 1 || n > kMaxQubits)
        throw capacity_error("qubit count must be in [1, " +
                             std::to_string(kMaxQubits) + "]");
    StateVector s;
    s.num_qubits = n;
    s.amps.assign(std::uint64_t{1} << n, Amplitude{0.0, 0.0});
    s.amps[0] = 1.0;
    return s;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Amplitude& a : amps) total += std::norm(a);
    return total;
}

std::string bitstring_of(std::uint64_t index, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (index >> i & 1) s[i] = '1';
    return s;
}

std::uint64_t index_of(const std::string& bits) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') idx |= std::uint64_t{1} << i;
    return idx;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline void apply_1q(StateVector& state, int q,
                     Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11) {
    const std::uint64_t step = std::uint64_t{1} << q;
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t i = base; i < base + step; ++i) {
            const Amplitude a0 = a[i];
            const Amplitude a1 = a[i + step];
            a[i] = u00 * a0 + u01 * a1;
            a[i + step] = u10 * a0 + u11 * a1;
        }
    }
}

inline void apply_hadamard(StateVector& state, int q) {
    const std::uint64_t step = std::uint64_t{1} << q;
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t i = base; i < base + step; ++i) {
            const Amplitude a0 = a[i];
            const Amplitude a1 = a[i + step];
            a[i] = (a0 + a1) * kInvSqrt2;
            a[i + step] = (a0 - a1) * kInvSqrt2;
        }
    }
}

inline void apply_x(StateVector& state, int q) {
    const std::uint64_t step = std::uint64_t{1} << q;
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t base = 0; base < dim; base += 2 * step)
        for (std::uint64_t i = base; i < base + step; ++i)
            std::swap(a[i], a[i + step]);
}

inline void apply_phase_on_ones(StateVector& state, int q, Amplitude phase) {
    const std::uint64_t step = std::uint64_t{1} << q;
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t base = step; base < dim; base += 2 * step)
        for (std::uint64_t i = base; i < base + step; ++i) a[i] *= phase;
}

inline std::uint64_t control_mask(const Gate& g) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i)
        mask |= std::uint64_t{1} << g.qubits[i];
    return mask;
}

// Applies a 2x2 unitary to the target qubit on the subspace where all
// control bits are set.
inline void apply_controlled_1q(StateVector& state, const Gate& g,
                                Amplitude u00, Amplitude u01,
                                Amplitude u10, Amplitude u11) {
    const std::uint64_t cmask = control_mask(g);
    const std::uint64_t tbit = std::uint64_t{1} << g.target();
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cmask) == cmask && !(i & tbit)) {
            const Amplitude a0 = a[i];
            const Amplitude a1 = a[i | tbit];
            a[i] = u00 * a0 + u01 * a1;
            a[i | tbit] = u10 * a0 + u11 * a1;
        }
    }
}

inline void apply_controlled_x(StateVector& state, const Gate& g) {
    const std::uint64_t cmask = control_mask(g);
    const std::uint64_t tbit = std::uint64_t{1} << g.target();
    const std::uint64_t dim = state.dim();
    Amplitude* a = state.amps.data();
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & tbit)) std::swap(a[i], a[i | tbit]);
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
    for (int q : gate.qubits)
        if (q < 0 || q >= state.num_qubits)
            throw contract_error("gate qubit index out of range for state");
    switch (gate.kind) {
        case GateKind::Hadamard:
            apply_hadamard(state, gate.qubits[0]);
            break;
        case GateKind::PauliX:
            apply_x(state, gate.qubits[0]);
            break;
        case GateKind::PauliZ:
            apply_phase_on_ones(state, gate.qubits[0], -1.0);
            break;
        case GateKind::PhaseRotationZ:
            apply_phase_on_ones(state, gate.qubits[0],
                                std::polar(1.0, gate.angle));
            break;
        case GateKind::RotationY: {
            const double c = std::cos(gate.angle / 2);
            const double s = std::sin(gate.angle / 2);
            apply_1q(state, gate.qubits[0], c, -s, s, c);
            break;
        }
        case GateKind::ControlledNot:
        case GateKind::Toffoli:
        case GateKind::MultiControlledX:
            apply_controlled_x(state, gate);
            break;
        case GateKind::ControlledZ:
            apply_controlled_1q(state, gate, 1.0, 0.0, 0.0, -1.0);
            break;
        case GateKind::ControlledRotationY: {
            const double c = std::cos(gate.angle / 2);
            const double s = std::sin(gate.angle / 2);
            apply_controlled_1q(state, gate, c, -s, s, c);
            break;
        }
    }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
    if (circuit.width > state.num_qubits)
        throw contract_error("circuit wider than state");
    for (const Gate& g : circuit.gates) apply_gate(state, g);
}

namespace {

inline double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::map<std::string, int> sample(const StateVector& state, int shots,
                                  std::uint64_t seed) {
    if (shots < 1) throw contract_error("shots must be >= 1");
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state.amps[i]);
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::map<std::string, int> hist;
    for (int s = 0; s < shots; ++s) {
        const double u = canonical_double(rng) * acc;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const std::uint64_t idx =
            it == cdf.end() ? state.dim() - 1
                            : static_cast<std::uint64_t>(it - cdf.begin());
        ++hist[bitstring_of(idx, state.num_qubits)];
    }
    return hist;
}

double probability_of(const StateVector& state,
                      const std::function<bool(std::uint64_t)>& accept) {
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if (accept(i)) p += std::norm(state.amps[i]);
    return p;
}

}  // namespace qca
