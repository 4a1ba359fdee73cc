#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qca/constraints.hpp"
#include "qca/grover.hpp"
#include "qca/noise.hpp"

namespace qca {

// Weighted set-cover instance: select subsets so every universe element is
// covered with total weight exactly `coverage_target` (1 = plain exact cover).
struct CoverInstance {
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> subsets;  // 0-based; subset i+1 in text
    std::map<int, long long> weights;               // 1-based; absent = 1
    long long coverage_target = 1;

    int num_subsets() const { return static_cast<int>(subsets.size()); }
    long long weight_of(int subset) const;  // 1-based
};

// Line-oriented text format:
//   universe: u1 u2 ... um
//   subset <i>: <elements...> [weight <w>]
//   target: <t>            (optional, default 1)
CoverInstance parse_instance(std::istream& in);
CoverInstance load_instance(const std::string& path);

// One constraint per universe element over the subsets containing it;
// cardinality form when all involved weights are 1, linear form otherwise.
std::vector<Constraint> constraints_of(const CoverInstance& instance);

// All satisfying assignments as basis indices (bit i-1 = subset i), ascending.
std::vector<std::uint64_t> brute_force(const CoverInstance& instance);

OraclePredicate oracle_of(const CoverInstance& instance);

enum class StrategyKind { Uniform, Cardinality, Parity, Sets };

struct StrategySpec {
    StrategyKind kind = StrategyKind::Uniform;
    int eta_th = 0;
    std::vector<int> sets;  // 1-based constraint indices for Sets
    std::string label() const;
};

// "uniform" | "cardinality" | "parity" | "sets:1,4"
StrategySpec parse_strategy_spec(const std::string& text, int eta_th = 0);

// Derives the constraint system and runs the requested preprocessing.
// Explicit set lists must name pairwise-disjoint constraints.
Strategy prepare_strategy(const CoverInstance& instance, const StrategySpec& spec);

struct ExperimentRow {
    std::string strategy;
    int kappa = 0;
    std::uint64_t f_size = 0;
    std::uint64_t s_size = 0;
    double ideal_prob = 0.0;
    bool noisy = false;
    double noisy_mean = 0.0;  // mean solution fraction over runs
    double noisy_std = 0.0;   // sample std of the per-run fractions
    int runs = 0;
    int shots = 0;
};

struct ExperimentConfig {
    StrategySpec spec;
    int kappa_lo = -1;  // -1 = auto (kappa_opt for both ends)
    int kappa_hi = -1;
    bool with_noise = false;
    NoiseModel noise;
    ShotPlan plan;
};

// constraints_of -> preprocess -> initializer -> Grover over the kappa range.
// Checks brute-force solutions lie inside F before running.
std::vector<ExperimentRow> run_experiment(const CoverInstance& instance,
                                          const ExperimentConfig& config);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace qca
