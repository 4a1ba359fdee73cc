#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qca/circuit.hpp"

namespace qca {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

// Dense statevector over n qubits. Basis index bit i holds the value of
// qubit i (the paper's q_{i+1}); rendered bitstrings read q1...qn left to right.
struct StateVector {
    int num_qubits = 0;
    std::vector<Amplitude> amps;

    static StateVector zero(int n);

    std::uint64_t dim() const { return amps.size(); }
    double norm_sq() const;
};

std::string bitstring_of(std::uint64_t index, int n);
std::uint64_t index_of(const std::string& bits);

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

// Multinomial draw from |amplitude|^2; deterministic given seed.
std::map<std::string, int> sample(const StateVector& state, int shots,
                                  std::uint64_t seed);

double probability_of(const StateVector& state,
                      const std::function<bool(std::uint64_t)>& accept);

}  // namespace qca
