#include "qca/resources.hpp"

#include <algorithm>
#include <cmath>

#include "qca/transpile.hpp"

namespace qca {

ResourceTally tally(const Circuit& circuit, bool decompose_mcx) {
    if (decompose_mcx) return tally(transpile(circuit), false);
    ResourceTally t;
    std::vector<long long> layer(circuit.width, 0);
    for (const Gate& g : circuit.gates) {
        ++t.total_gates;
        if (g.multi_qubit()) ++t.two_qubit_gates;
        long long l = 0;
        for (int q : g.qubits) l = std::max(l, layer[q]);
        ++l;
        for (int q : g.qubits) layer[q] = l;
        t.depth = std::max(t.depth, l);
    }
    return t;
}

long long metric_of(const ResourceTally& t, Metric metric) {
    switch (metric) {
        case Metric::TotalGates: return t.total_gates;
        case Metric::TwoQubitGates: return t.two_qubit_gates;
        case Metric::Depth: return t.depth;
    }
    return 0;
}

double total_resource(const StrategyCost& cost, Metric metric) {
    const double s = static_cast<double>(metric_of(cost.prep, metric));
    const double d = static_cast<double>(metric_of(cost.diffusion_core, metric));
    return s + (cost.oracle_cost + d + 2.0 * s) * static_cast<double>(cost.kappa);
}

double efficiency_bound(double s_tau, double s_sigma, long long kappa_tau,
                        long long kappa_sigma) {
    if (kappa_sigma <= kappa_tau)
        throw contract_error("bound requires kappa_sigma > kappa_tau");
    return (2.0 * kappa_tau + 1.0) / static_cast<double>(kappa_sigma - kappa_tau) *
               (s_tau - s_sigma) -
           2.0 * s_sigma;
}

namespace {
const double kPi = std::acos(-1.0);
}

PropositionResult proposition_check(Proposition kind, int mu, double s_next,
                                    double s_prev, double o_prev_plus_d) {
    double factor = 0.0;
    switch (kind) {
        case Proposition::P1:
            if (mu < 2) throw contract_error("P1 requires mu >= 2");
            factor = 24.0 * kPi /
                     (21.0 * std::sqrt(std::exp2(mu) / mu) - 8.0 * kPi);
            break;
        case Proposition::P2:
            if (mu < 2) throw contract_error("P2 requires mu >= 2");
            factor = 120.0 * kPi /
                     (109.0 * std::sqrt(2.0 * mu / (mu + 1.0)) - 40.0 * kPi);
            break;
        case Proposition::P3:
            if (mu < 1) throw contract_error("P3 requires mu >= 1");
            factor = 24.0 * kPi / (21.0 * std::sqrt(2.0) - 8.0 * kPi);
            break;
    }
    PropositionResult r;
    r.rhs = factor * (s_next - s_prev) - 2.0 * s_prev;
    r.sufficient = o_prev_plus_d > r.rhs;
    return r;
}

double p1_circuit_rhs(int mu) {
    if (mu < 2) throw contract_error("P1 requires mu >= 2");
    return 48.0 * kPi * mu / (21.0 * std::sqrt(std::exp2(mu) / mu) - 8.0 * kPi);
}

double p2_circuit_rhs(int mu) {
    if (mu < 2) throw contract_error("P2 requires mu >= 2");
    return 240.0 * kPi / (109.0 * std::sqrt(2.0 * mu / (mu + 1.0)) - 40.0 * kPi);
}

double p3_circuit_rhs(int mu) {
    if (mu < 1) throw contract_error("P3 requires mu >= 1");
    return 24.0 * kPi * (2.0 * mu + 1.0) / (21.0 * std::sqrt(2.0) - 8.0 * kPi);
}

ResourceTally mcx_cost(int controls) {
    if (controls < 1) throw contract_error("need at least one control");
    if (controls == 1) return {1, 1, 1};
    return tally(transpile(mcx_vchain(controls)), false);
}

}  // namespace qca
