#pragma once

#include <complex>
#include <vector>

#include "qca/circuit.hpp"
#include "qca/constraints.hpp"
#include "qca/state_vector.hpp"

namespace qca {

// Cascade circuit preparing the uniform weight-1 superposition on mu qubits.
// Tally is exactly (2mu-1, 2mu-2, 2mu-1) for mu >= 2.
Circuit dicke1_circuit(int mu);

// Prepares (|0...0> + sum of weight-1 strings) / sqrt(mu+1).
Circuit dicke11_circuit(int mu);

// Uniform superposition over all mu-bit strings of weight parity nu.
// Tally is bounded by (2mu+1, mu-1, mu+1).
Circuit ghz_x_circuit(int mu, int nu);

// 1/sqrt(C(mu,nu)) on every weight-nu index, 0 elsewhere.
std::vector<Amplitude> dicke_amplitudes(int mu, int nu);

// Uniform over all strings whose weight lies in [max(0, b-r), min(b, mu)].
std::vector<Amplitude> relaxed_dicke_amplitudes(int mu, int b, int r);

// Initializer for a strategy: circuit-form blocks plus, in ideal mode only,
// amplitude blocks injected directly for states whose circuits are out of scope.
struct Initializer {
    struct AmplitudeBlock {
        std::vector<int> qubits;          // 0-based, ascending
        std::vector<Amplitude> amplitudes;  // length 2^|qubits|
    };
    Circuit circuit;
    std::vector<AmplitudeBlock> injected;
    std::vector<int> permutation;  // copied from the selection

    bool circuit_only() const { return injected.empty(); }
};

Initializer build_initializer(const Strategy& strategy);

// Prepares the strategy's initial state from |0...0>: applies the circuit,
// then injects any amplitude blocks. The state must be at least n qubits wide
// with the extra qubits in |0>.
void prepare_initial_state(StateVector& state, const Initializer& init);

StateVector initial_state(const Strategy& strategy);

}  // namespace qca
