#include "qca/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "qca/transpile.hpp"

namespace qca {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int run, int shot) {
    return splitmix64(splitmix64(seed ^ 0xA5A5A5A5A5A5A5A5ull) +
                      splitmix64(static_cast<std::uint64_t>(run) << 32 |
                                 static_cast<std::uint64_t>(shot)));
}

inline double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Transpiles gate-by-gate so the native->transpiled slot ranges are known.
// Every per-gate call uses the same ancilla base (the input width), so the
// concatenation matches a whole-circuit transpile up to ancilla count.
std::pair<Circuit, std::vector<std::pair<int, int>>> transpile_with_slots(
    const Circuit& native, int full_width) {
    Circuit out(native.width, full_width - native.width);
    std::vector<std::pair<int, int>> slots;
    slots.reserve(native.gates.size());
    for (const Gate& g : native.gates) {
        Circuit one(native.width);
        one.gates.push_back(g);
        const Circuit t = transpile(one);
        const int begin = static_cast<int>(out.gates.size());
        for (const Gate& tg : t.gates) out.gates.push_back(tg);
        slots.emplace_back(begin, static_cast<int>(out.gates.size()));
    }
    return {std::move(out), std::move(slots)};
}

void apply_pauli(StateVector& state, int q, int code) {
    const std::uint64_t step = std::uint64_t{1} << q;
    Amplitude* a = state.amps.data();
    const std::uint64_t dim = state.dim();
    switch (code) {
        case 0:  // X
            for (std::uint64_t base = 0; base < dim; base += 2 * step)
                for (std::uint64_t i = base; i < base + step; ++i)
                    std::swap(a[i], a[i + step]);
            break;
        case 1:  // Y
            for (std::uint64_t base = 0; base < dim; base += 2 * step)
                for (std::uint64_t i = base; i < base + step; ++i) {
                    const Amplitude a0 = a[i];
                    a[i] = Amplitude{0.0, -1.0} * a[i + step];
                    a[i + step] = Amplitude{0.0, 1.0} * a0;
                }
            break;
        default:  // Z
            for (std::uint64_t base = step; base < dim; base += 2 * step)
                for (std::uint64_t i = base; i < base + step; ++i) a[i] = -a[i];
            break;
    }
}

struct ErrorEvent {
    int segment;  // 0 = init, 1..queries = query index
    int slot;     // index into that segment's transpiled gates
    int code;     // 1q: 0..2; 2q: 0..14
    bool two_qubit;
};

struct SegmentTables {
    std::vector<int> one_q_slots;
    std::vector<int> two_q_slots;
    std::vector<bool> atom_touches_ancilla;
};

SegmentTables build_tables(const Circuit& transpiled,
                           const std::vector<std::pair<int, int>>& slots,
                           int data_qubits) {
    SegmentTables t;
    for (int i = 0; i < static_cast<int>(transpiled.gates.size()); ++i) {
        (transpiled.gates[i].multi_qubit() ? t.two_q_slots : t.one_q_slots)
            .push_back(i);
    }
    t.atom_touches_ancilla.resize(slots.size(), false);
    for (std::size_t a = 0; a < slots.size(); ++a)
        for (int i = slots[a].first; i < slots[a].second; ++i)
            for (int q : transpiled.gates[i].qubits)
                if (q >= data_qubits) t.atom_touches_ancilla[a] = true;
    return t;
}

int thread_count() {
    if (const char* env = std::getenv("QCA_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

class TrajectoryEngine {
  public:
    TrajectoryEngine(const TrajectoryJob& job, const NoiseModel& noise)
        : job_(job),
          noise_(noise),
          init_tables_(build_tables(job.init_transpiled, job.init_slots,
                                    job.data_qubits)),
          query_tables_(build_tables(job.query_transpiled, job.query_slots,
                                     job.data_qubits)) {
        // Narrow ideal checkpoints after init and after each query.
        StateVector s = StateVector::zero(job_.data_qubits);
        apply_circuit(s, job_.init_native);
        checkpoints_.push_back(s);
        for (int q = 1; q <= job_.queries; ++q) {
            apply_phase_oracle(s);
            apply_circuit(s, job_.query_native);
            checkpoints_.push_back(s);
        }
        const StateVector& fin = checkpoints_.back();
        final_cdf_.resize(fin.dim());
        double acc = 0.0;
        for (std::uint64_t i = 0; i < fin.dim(); ++i) {
            acc += std::norm(fin.amps[i]);
            final_cdf_[i] = acc;
        }
        cdf_total_ = acc;
    }

    // Returns the measured data-qubit basis index for one shot.
    std::uint64_t shoot(std::mt19937_64& rng) const {
        std::vector<ErrorEvent> events;
        draw_errors(rng, events);
        if (events.empty()) {
            const double u = canonical_double(rng) * cdf_total_;
            const auto it =
                std::lower_bound(final_cdf_.begin(), final_cdf_.end(), u);
            return it == final_cdf_.end()
                       ? final_cdf_.size() - 1
                       : static_cast<std::uint64_t>(it - final_cdf_.begin());
        }
        return replay(events, rng);
    }

  private:
    void apply_phase_oracle(StateVector& s) const {
        const std::uint64_t mask =
            (std::uint64_t{1} << job_.data_qubits) - 1;
        for (std::uint64_t i = 0; i < s.dim(); ++i)
            if (job_.oracle(i & mask)) s.amps[i] = -s.amps[i];
    }

    // Bernoulli error per transpiled gate, realized as a binomial count over
    // each gate class followed by uniform placement without replacement.
    void draw_errors(std::mt19937_64& rng, std::vector<ErrorEvent>& out) const {
        draw_class(rng, out, false, noise_.p1);
        draw_class(rng, out, true, noise_.p2);
        std::sort(out.begin(), out.end(), [](const ErrorEvent& a, const ErrorEvent& b) {
            return a.segment != b.segment ? a.segment < b.segment : a.slot < b.slot;
        });
    }

    void draw_class(std::mt19937_64& rng, std::vector<ErrorEvent>& out,
                    bool two_qubit, double p) const {
        if (p <= 0.0) return;
        const auto& init_slots =
            two_qubit ? init_tables_.two_q_slots : init_tables_.one_q_slots;
        const auto& query_slots =
            two_qubit ? query_tables_.two_q_slots : query_tables_.one_q_slots;
        const long long n_init = static_cast<long long>(init_slots.size());
        const long long n_query = static_cast<long long>(query_slots.size());
        const long long total = n_init + n_query * job_.queries;
        if (total == 0) return;
        std::binomial_distribution<long long> binom(total, p);
        const long long k = binom(rng);
        std::vector<long long> flats;
        std::uniform_int_distribution<long long> uni(0, total - 1);
        while (static_cast<long long>(flats.size()) < k) {
            const long long f = uni(rng);
            if (std::find(flats.begin(), flats.end(), f) == flats.end())
                flats.push_back(f);
        }
        const int n_codes = two_qubit ? 15 : 3;
        std::uniform_int_distribution<int> code(0, n_codes - 1);
        for (long long f : flats) {
            ErrorEvent e;
            e.two_qubit = two_qubit;
            e.code = code(rng);
            if (f < n_init) {
                e.segment = 0;
                e.slot = init_slots[static_cast<std::size_t>(f)];
            } else {
                const long long j = f - n_init;
                e.segment = 1 + static_cast<int>(j / n_query);
                e.slot = query_slots[static_cast<std::size_t>(j % n_query)];
            }
            out.push_back(e);
        }
    }

    void widen(StateVector& s) const {
        if (s.num_qubits == job_.width) return;
        StateVector wide;
        wide.num_qubits = job_.width;
        wide.amps.assign(std::uint64_t{1} << job_.width, Amplitude{0.0, 0.0});
        std::copy(s.amps.begin(), s.amps.end(), wide.amps.begin());
        s = std::move(wide);
    }

    void apply_error(StateVector& s, const Circuit& transpiled,
                     const ErrorEvent& e) const {
        const Gate& g = transpiled.gates[e.slot];
        if (!e.two_qubit) {
            apply_pauli(s, g.qubits[0], e.code);
        } else {
            const int c = e.code + 1;  // 1..15 over {I,X,Y,Z}^2 minus II
            if (c / 4 > 0) apply_pauli(s, g.qubits[0], c / 4 - 1);
            if (c % 4 > 0) apply_pauli(s, g.qubits[1], c % 4 - 1);
        }
    }

    // Replays the circuit from the deepest checkpoint preceding the first
    // error, applying native atoms except where an error lands inside one.
    std::uint64_t replay(const std::vector<ErrorEvent>& events,
                         std::mt19937_64& rng) const {
        const int start = events.front().segment;
        StateVector state = start == 0 ? StateVector::zero(job_.data_qubits)
                                       : checkpoints_[start - 1];
        std::size_t next = 0;
        for (int seg = start; seg <= job_.queries; ++seg) {
            if (seg >= 1) apply_segment_oracle(state);
            const bool is_init = seg == 0;
            const Circuit& native = is_init ? job_.init_native : job_.query_native;
            const Circuit& transpiled =
                is_init ? job_.init_transpiled : job_.query_transpiled;
            const auto& slots = is_init ? job_.init_slots : job_.query_slots;
            const auto& tables = is_init ? init_tables_ : query_tables_;

            // Events belonging to this segment, already slot-sorted.
            const std::size_t seg_begin = next;
            while (next < events.size() && events[next].segment == seg) ++next;
            if (seg_begin == next) {
                apply_circuit(state, native);
                continue;
            }
            std::size_t ev = seg_begin;
            for (std::size_t atom = 0; atom < slots.size(); ++atom) {
                const auto [b, e] = slots[atom];
                if (ev == next || events[ev].slot >= e) {
                    apply_gate(state, native.gates[atom]);
                    continue;
                }
                if (tables.atom_touches_ancilla[atom]) widen(state);
                for (int i = b; i < e; ++i) {
                    apply_gate(state, transpiled.gates[i]);
                    while (ev < next && events[ev].slot == i)
                        apply_error(state, transpiled, events[ev++]);
                }
            }
        }
        // Single measurement; ancilla bits are discarded.
        const double u = canonical_double(rng) * state.norm_sq();
        double acc = 0.0;
        std::uint64_t idx = state.dim() - 1;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            acc += std::norm(state.amps[i]);
            if (acc >= u) {
                idx = i;
                break;
            }
        }
        return idx & ((std::uint64_t{1} << job_.data_qubits) - 1);
    }

    void apply_segment_oracle(StateVector& s) const { apply_phase_oracle(s); }

    const TrajectoryJob& job_;
    NoiseModel noise_;
    SegmentTables init_tables_;
    SegmentTables query_tables_;
    std::vector<StateVector> checkpoints_;
    std::vector<double> final_cdf_;
    double cdf_total_ = 1.0;
};

}  // namespace

TrajectoryJob make_trajectory_job(const Circuit& init, const Circuit& diffusion,
                                  std::function<bool(std::uint64_t)> oracle,
                                  int queries) {
    if (queries > 0 && !oracle) throw contract_error("Grover job requires an oracle");
    TrajectoryJob job;
    job.data_qubits = init.width;
    job.queries = queries;
    job.oracle = std::move(oracle);
    job.init_native = init;
    job.query_native = queries > 0 ? diffusion : Circuit(init.width);

    int full = init.width;
    for (const Circuit* c : {&job.init_native, &job.query_native})
        for (const Gate& g : c->gates)
            if (g.kind == GateKind::MultiControlledX)
                full = std::max(full, init.width + std::max(0, g.control_count() - 1));
    job.width = full;
    std::tie(job.init_transpiled, job.init_slots) =
        transpile_with_slots(job.init_native, full);
    std::tie(job.query_transpiled, job.query_slots) =
        transpile_with_slots(job.query_native, full);
    return job;
}

std::vector<int> run_noisy(const TrajectoryJob& job, const ShotPlan& plan,
                           const NoiseModel& noise,
                           const std::function<bool(std::uint64_t)>& solution) {
    if (plan.runs < 1 || plan.shots_per_run < 1)
        throw contract_error("plan requires runs >= 1 and shots >= 1");
    if (noise.p1 < 0 || noise.p1 > 1 || noise.p2 < 0 || noise.p2 > 1)
        throw contract_error("depolarizing rates must lie in [0, 1]");
    TrajectoryEngine engine(job, noise);

    std::vector<int> counts(plan.runs, 0);
    const int workers =
        std::min(thread_count(), plan.runs * plan.shots_per_run);
    auto work = [&](int worker, std::vector<int>& local) {
        for (int r = 0; r < plan.runs; ++r) {
            for (int s = worker; s < plan.shots_per_run; s += workers) {
                std::mt19937_64 rng(derive_seed(plan.seed, r, s));
                const std::uint64_t outcome = engine.shoot(rng);
                if (solution(outcome)) ++local[r];
            }
        }
    };
    if (workers <= 1) {
        work(0, counts);
    } else {
        std::vector<std::vector<int>> locals(workers,
                                             std::vector<int>(plan.runs, 0));
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, w, std::ref(locals[w]));
        for (auto& t : threads) t.join();
        for (const auto& local : locals)
            for (int r = 0; r < plan.runs; ++r) counts[r] += local[r];
    }
    return counts;
}

std::vector<int> run_noisy(const Circuit& transpiled, const ShotPlan& plan,
                           const NoiseModel& noise,
                           const std::function<bool(std::uint64_t)>& solution) {
    if (!in_basis(transpiled))
        throw contract_error("circuit must be transpiled to the noise basis");
    TrajectoryJob job;
    job.data_qubits = transpiled.width;
    job.width = transpiled.width;
    job.queries = 0;
    job.init_native = transpiled;
    job.query_native = Circuit(transpiled.width);
    job.init_transpiled = transpiled;
    for (int i = 0; i < static_cast<int>(transpiled.gates.size()); ++i)
        job.init_slots.emplace_back(i, i + 1);
    return run_noisy(job, plan, noise, solution);
}

}  // namespace qca
