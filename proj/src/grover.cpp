#include "qca/grover.hpp"

#include <cmath>

namespace qca {

void apply_oracle(StateVector& state, const OraclePredicate& f) {
    if (f.arity > state.num_qubits)
        throw contract_error("oracle arity exceeds state width");
    const std::uint64_t mask = (std::uint64_t{1} << f.arity) - 1;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if (f.accept(i & mask)) state.amps[i] = -state.amps[i];
}

Circuit diffusion_circuit(const Circuit& initializer, int n) {
    if (initializer.width != n)
        throw contract_error("initializer width does not match qubit count");
    Circuit d(n);
    d.append(initializer.inverted());
    for (int q = 0; q < n; ++q) d.add(Gate::x(q));
    if (n == 1) {
        d.add(Gate::h(0));
        d.add(Gate::x(0));
        d.add(Gate::h(0));
    } else {
        d.add(Gate::h(n - 1));
        std::vector<int> controls(n - 1);
        for (int q = 0; q < n - 1; ++q) controls[q] = q;
        d.add(Gate::mcx(controls, n - 1));
        d.add(Gate::h(n - 1));
    }
    for (int q = 0; q < n; ++q) d.add(Gate::x(q));
    d.append(initializer);
    return d;
}

double success_probability(std::uint64_t f_size, std::uint64_t s_size, int kappa) {
    if (s_size < 1 || s_size > f_size)
        throw contract_error("need 1 <= |S| <= |F|");
    const double theta = std::asin(std::sqrt(
        static_cast<double>(s_size) / static_cast<double>(f_size)));
    const double s = std::sin((2.0 * kappa + 1.0) * theta);
    return s * s;
}

GroverRun run(const Strategy& strategy, const Initializer& init,
              const OraclePredicate& f, int kappa, RunMode mode) {
    if (kappa < 0) throw contract_error("query count must be >= 0");
    if (f.arity != strategy.n)
        throw contract_error("oracle arity does not match strategy");
    if (mode == RunMode::CircuitExact && !init.circuit_only())
        throw contract_error(
            "amplitude-injected initializer blocks have no circuit form; "
            "CircuitExact mode requires circuit-only initializers");

    StateVector psi0 = StateVector::zero(strategy.n);
    prepare_initial_state(psi0, init);

    // The two-component rotation picture requires every solution inside the
    // search space.
    constexpr double kSupportEps = 1e-12;
    for (std::uint64_t i = 0; i < psi0.dim(); ++i)
        if (f.accept(i) && std::norm(psi0.amps[i]) < kSupportEps)
            throw contract_error("oracle accepts a string outside the search space");

    GroverRun result;
    result.mode = mode;
    Circuit diffusion;
    if (mode == RunMode::CircuitExact)
        diffusion = diffusion_circuit(init.circuit, strategy.n);

    StateVector state = psi0;
    auto record = [&] {
        double p = 0.0;
        for (std::uint64_t i = 0; i < state.dim(); ++i)
            if (f.accept(i)) p += std::norm(state.amps[i]);
        result.trace.push_back(p);
    };
    record();
    for (int k = 0; k < kappa; ++k) {
        apply_oracle(state, f);
        if (mode == RunMode::Ideal) {
            // Matrix-free reflection about |psi0>.
            Amplitude overlap{0.0, 0.0};
            for (std::uint64_t i = 0; i < state.dim(); ++i)
                overlap += std::conj(psi0.amps[i]) * state.amps[i];
            for (std::uint64_t i = 0; i < state.dim(); ++i)
                state.amps[i] = 2.0 * overlap * psi0.amps[i] - state.amps[i];
        } else {
            apply_circuit(state, diffusion);
        }
        record();
    }
    result.final_state = std::move(state);
    return result;
}

GroverRun run(const Strategy& strategy, const OraclePredicate& f, int kappa,
              RunMode mode) {
    return run(strategy, build_initializer(strategy), f, kappa, mode);
}

}  // namespace qca
