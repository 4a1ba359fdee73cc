#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qca/circuit.hpp"
#include "qca/grover.hpp"

namespace qca {

// Depolarizing rates per gate application.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
};

struct ShotPlan {
    int runs = 1;
    int shots_per_run = 1;
    std::uint64_t seed = 0;
};

// A Grover execution prepared for Monte-Carlo Pauli trajectories. Noise is
// attached to the transpiled gate stream; simulation replays native gates
// wherever no error interrupts a decomposed block, and stays at the narrow
// data width until an error touches the ancilla block.
struct TrajectoryJob {
    Circuit init_native;       // width = data_qubits
    Circuit query_native;      // width = data_qubits; empty when queries == 0
    Circuit init_transpiled;   // width = total width
    Circuit query_transpiled;
    std::vector<std::pair<int, int>> init_slots;   // native gate -> transpiled range
    std::vector<std::pair<int, int>> query_slots;
    std::function<bool(std::uint64_t)> oracle;     // ideal; applied between segments
    int queries = 0;
    int data_qubits = 0;
    int width = 0;
};

TrajectoryJob make_trajectory_job(const Circuit& init, const Circuit& diffusion,
                                  std::function<bool(std::uint64_t)> oracle,
                                  int queries);

// Solution counts per run. Deterministic given the plan seed; shots may be
// executed in parallel (QCA_WORKERS overrides the thread count).
std::vector<int> run_noisy(const TrajectoryJob& job, const ShotPlan& plan,
                           const NoiseModel& noise,
                           const std::function<bool(std::uint64_t)>& solution);

// Single already-transpiled circuit (strict: rejects out-of-basis gates).
std::vector<int> run_noisy(const Circuit& transpiled, const ShotPlan& plan,
                           const NoiseModel& noise,
                           const std::function<bool(std::uint64_t)>& solution);

}  // namespace qca
