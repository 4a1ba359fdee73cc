#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qca/constraints.hpp"
#include "qca/state_prep.hpp"
#include "qca/state_vector.hpp"

namespace qca {

// The Boolean function f over basis indices of an n-qubit register.
struct OraclePredicate {
    int arity = 0;
    std::function<bool(std::uint64_t)> accept;
};

enum class RunMode { Ideal, CircuitExact };

struct GroverRun {
    RunMode mode = RunMode::Ideal;
    std::vector<double> trace;  // success probability after 0..kappa queries
    StateVector final_state;
};

// Phase oracle: negates the amplitude of every accepted index.
void apply_oracle(StateVector& state, const OraclePredicate& f);

// V_F-conjugated reflection; equals 2|psi0><psi0| - I up to global phase.
Circuit diffusion_circuit(const Circuit& initializer, int n);

double success_probability(std::uint64_t f_size, std::uint64_t s_size, int kappa);

// Runs kappa Grover queries from the strategy's initial state, recording the
// solution probability after every query. Requires S within the support of F.
GroverRun run(const Strategy& strategy, const Initializer& init,
              const OraclePredicate& f, int kappa, RunMode mode);

GroverRun run(const Strategy& strategy, const OraclePredicate& f, int kappa,
              RunMode mode);

}  // namespace qca
