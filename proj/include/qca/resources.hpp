#pragma once

#include "qca/circuit.hpp"

namespace qca {

struct ResourceTally {
    long long total_gates = 0;
    long long two_qubit_gates = 0;
    long long depth = 0;

    bool operator==(const ResourceTally&) const = default;
};

enum class Metric { TotalGates, TwoQubitGates, Depth };

// Gate counts plus greedy earliest-layer depth (gates on disjoint qubit sets
// share a layer). With decompose_mcx, MultiControlledX gates are counted per
// their transpiled decomposition; otherwise each counts as one gate.
ResourceTally tally(const Circuit& circuit, bool decompose_mcx = false);

long long metric_of(const ResourceTally& t, Metric metric);

struct StrategyCost {
    ResourceTally prep;            // S_sigma
    double oracle_cost = 0.0;      // O_sigma, supplied externally
    ResourceTally diffusion_core;  // D
    long long kappa = 0;
};

// S + (O + D + 2S) * kappa on the selected metric.
double total_resource(const StrategyCost& cost, Metric metric);

// Lower bound on O_sigma + D for the sigma->tau comparison:
// ((2k_tau+1)/(k_sigma-k_tau)) * (S_tau - S_sigma) - 2*S_sigma.
double efficiency_bound(double s_tau, double s_sigma, long long kappa_tau,
                        long long kappa_sigma);

enum class Proposition { P1, P2, P3 };

struct PropositionResult {
    double rhs = 0.0;
    bool sufficient = false;
};

// Evaluates the sufficient-condition inequality for adding one constraint
// block. Preconditions on |F|/|S| ratios are the caller's responsibility.
PropositionResult proposition_check(Proposition kind, int mu, double s_next,
                                    double s_prev, double o_prev_plus_d);

// Circuit-specific simplified right-hand sides.
double p1_circuit_rhs(int mu);  // 48*pi*mu / (21*sqrt(2^mu/mu) - 8*pi)
double p2_circuit_rhs(int mu);  // 240*pi / (109*sqrt(2mu/(mu+1)) - 40*pi)
double p3_circuit_rhs(int mu);  // 24*pi*(2mu+1) / (21*sqrt(2) - 8*pi)

// Cost of a multi-controlled X under the V-chain + Toffoli-expansion model.
ResourceTally mcx_cost(int controls);

}  // namespace qca
