#include "qca/state_prep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qca {

namespace {

// Shared cascade: for i = 1..mu-1, a controlled rotation from qubit i-1 onto
// qubit i with cos(theta/2) = 1/sqrt(mu-i+1), then a CNOT back onto qubit i-1.
// Splits one unit of Hamming weight across the block.
void append_weight_cascade(Circuit& c, int mu) {
    for (int i = 1; i <= mu - 1; ++i) {
        const double theta = 2.0 * std::acos(1.0 / std::sqrt(mu - i + 1));
        c.add(Gate::cry(i - 1, i, theta));
        c.add(Gate::cx(i, i - 1));
    }
}

}  // namespace

Circuit dicke1_circuit(int mu) {
    if (mu < 1) throw contract_error("block size must be >= 1");
    Circuit c(mu);
    c.add(Gate::x(0));
    append_weight_cascade(c, mu);
    return c;
}

Circuit dicke11_circuit(int mu) {
    if (mu < 1) throw contract_error("block size must be >= 1");
    Circuit c(mu);
    c.add(Gate::ry(0, 2.0 * std::acos(1.0 / std::sqrt(mu + 1))));
    append_weight_cascade(c, mu);
    return c;
}

Circuit ghz_x_circuit(int mu, int nu) {
    if (mu < 1) throw contract_error("block size must be >= 1");
    if (nu != 0 && nu != 1) throw contract_error("parity must be 0 or 1");
    Circuit c(mu);
    if (mu == 1) {
        if (nu == 1) c.add(Gate::x(0));  // size-1 parity pins the bit
        return c;
    }
    if (mu == 2 && nu == 1) {
        // Single-gate |-> preparation keeps the depth within mu+1.
        c.add(Gate::ry(0, -std::acos(-1.0) / 2));
        c.add(Gate::cx(0, 1));
        c.add(Gate::h(0));
        c.add(Gate::h(1));
        return c;
    }
    c.add(Gate::h(0));
    for (int i = 1; i < mu; ++i) c.add(Gate::cx(i - 1, i));
    for (int i = 0; i < mu; ++i) c.add(Gate::h(i));
    // In the X basis a trailing bit flip toggles the superposition's parity;
    // it schedules in parallel with the tail of the CNOT chain.
    if (nu == 1) c.add(Gate::x(0));
    return c;
}

std::vector<Amplitude> dicke_amplitudes(int mu, int nu) {
    if (mu < 1 || nu < 0 || nu > mu) throw contract_error("need 0 <= nu <= mu");
    std::vector<Amplitude> amps(std::uint64_t{1} << mu, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(binomial(mu, nu)));
    for (std::uint64_t x = 0; x < amps.size(); ++x)
        if (std::popcount(x) == nu) amps[x] = a;
    return amps;
}

std::vector<Amplitude> relaxed_dicke_amplitudes(int mu, int b, int r) {
    if (mu < 1 || b < 0 || r < 0) throw contract_error("invalid relaxed Dicke shape");
    const int lo = std::max(0, b - r);
    const int hi = std::min(b, mu);
    if (lo > hi) throw infeasible_error("empty Hamming-weight window");
    std::uint64_t omega = 0;
    for (int w = lo; w <= hi; ++w) omega += binomial(mu, w);
    std::vector<Amplitude> amps(std::uint64_t{1} << mu, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(omega));
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        const int w = std::popcount(x);
        if (w >= lo && w <= hi) amps[x] = a;
    }
    return amps;
}

namespace {

std::vector<int> block_qubits(const std::vector<int>& members) {
    std::vector<int> qs;
    qs.reserve(members.size());
    for (int v : members) qs.push_back(v - 1);
    std::sort(qs.begin(), qs.end());
    return qs;
}

}  // namespace

Initializer build_initializer(const Strategy& strategy) {
    const Selection& sel = strategy.selection;
    Initializer init;
    init.circuit = Circuit(strategy.n);
    init.permutation = sel.permutation;

    std::vector<bool> covered(strategy.n, false);
    auto mark = [&](const std::vector<int>& qs) {
        for (int q : qs) {
            if (covered[q]) throw contract_error("overlapping initializer blocks");
            covered[q] = true;
        }
    };

    for (const SelectedSet& s : sel.disjoint_sets) {
        const std::vector<int> qs = block_qubits(s.members);
        mark(qs);
        const int mu = static_cast<int>(qs.size());
        if (s.kind == BlockKind::Ghz) {
            init.circuit.append_mapped(ghz_x_circuit(mu, s.parity), qs);
        } else if (s.target == 0) {
            // |0...0> block: nothing to do
        } else if (s.target == mu) {
            for (int q : qs) init.circuit.add(Gate::x(q));
        } else if (s.target == 1) {
            init.circuit.append_mapped(dicke1_circuit(mu), qs);
        } else {
            init.injected.push_back({qs, dicke_amplitudes(mu, s.target)});
        }
    }
    for (const ReducedSet& s : sel.reduced_sets) {
        const std::vector<int> qs = block_qubits(s.members);
        mark(qs);
        const int mu = static_cast<int>(qs.size());
        const int lo = std::max(0, s.target - s.overlap);
        const int hi = std::min(s.target, mu);
        if (lo == 0 && hi == 1) {
            init.circuit.append_mapped(dicke11_circuit(mu), qs);
        } else if (lo == hi) {
            if (lo == 1)
                init.circuit.append_mapped(dicke1_circuit(mu), qs);
            else if (lo == mu)
                for (int q : qs) init.circuit.add(Gate::x(q));
            else if (lo != 0)
                init.injected.push_back({qs, dicke_amplitudes(mu, lo)});
        } else {
            init.injected.push_back(
                {qs, relaxed_dicke_amplitudes(mu, s.target, s.overlap)});
        }
    }
    for (int q = 0; q < strategy.n; ++q)
        if (!covered[q]) init.circuit.add(Gate::h(q));
    return init;
}

void prepare_initial_state(StateVector& state, const Initializer& init) {
    apply_circuit(state, init.circuit);
    for (const auto& block : init.injected) {
        const int mu = static_cast<int>(block.qubits.size());
        std::uint64_t block_mask = 0;
        for (int q : block.qubits) block_mask |= std::uint64_t{1} << q;
        for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
            if (idx & block_mask) continue;  // visit each ancestral index once
            const Amplitude base = state.amps[idx];
            if (base == Amplitude{0.0, 0.0}) continue;
            for (std::uint64_t x = 1; x < (std::uint64_t{1} << mu); ++x) {
                std::uint64_t scattered = idx;
                for (int b = 0; b < mu; ++b)
                    if (x >> b & 1) scattered |= std::uint64_t{1} << block.qubits[b];
                state.amps[scattered] = base * block.amplitudes[x];
            }
            state.amps[idx] = base * block.amplitudes[0];
        }
    }
}

StateVector initial_state(const Strategy& strategy) {
    StateVector state = StateVector::zero(strategy.n);
    prepare_initial_state(state, build_initializer(strategy));
    return state;
}

}  // namespace qca
