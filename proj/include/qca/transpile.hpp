#pragma once

#include "qca/circuit.hpp"

namespace qca {

// True when every gate is in the {PhaseRotationZ, Hadamard, ControlledNot} basis.
bool in_basis(const Circuit& circuit);

// Standard 15-gate Toffoli network: 6 CNOTs plus 9 one-qubit gates.
Circuit toffoli_network(int c0, int c1, int t, int width);

// V-chain multi-controlled X over `controls` data controls, the target last;
// allocates controls-1 ancillas and uses max(1, 2*controls-3) Toffolis.
// Gates are left as Toffoli/ControlledNot (not expanded).
Circuit mcx_vchain(int controls);

// Rewrites a circuit over the module gate set into the {PhaseRotationZ,
// Hadamard, ControlledNot} basis, equal to the input up to global phase.
// MultiControlledX gates acquire a shared ancilla block appended after the
// input qubits.
Circuit transpile(const Circuit& circuit);

}  // namespace qca
