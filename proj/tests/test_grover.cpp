#include <doctest.h>

#include <bit>
#include <cmath>

#include "dense.hpp"
#include "qca/grover.hpp"

using namespace qca;

namespace {

Strategy single_block(int n, std::vector<int> members, int target) {
    Selection sel;
    sel.disjoint_sets.push_back({std::move(members), target, BlockKind::Dicke, 0});
    sel.used = sel.disjoint_sets[0].members;
    sel.permutation.resize(n);
    int pos = 1;
    for (int v : sel.used) sel.permutation[v - 1] = pos++;
    for (int v = 1; v <= n; ++v)
        if (sel.permutation[v - 1] == 0) sel.permutation[v - 1] = pos++;
    return make_strategy(sel, n, 0);
}

Strategy uniform(int n) {
    return make_strategy(preprocess_cardinality({}, 0, n), n, 0);
}

}  // namespace

TEST_SUITE("grover") {

TEST_CASE("phase oracle flips accepted amplitudes") {
    StateVector s = StateVector::zero(3);
    apply_circuit(s, [] {
        Circuit c(3);
        for (int q = 0; q < 3; ++q) c.add(Gate::h(q));
        return c;
    }());
    OraclePredicate f{3, [](std::uint64_t x) { return x == 5; }};
    apply_oracle(s, f);
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(s.amps[i].real() * (i == 5 ? -1 : 1) > 0);
}

TEST_CASE("diffusion is the reflection about the initial state") {
    // n = 3, one weight-1 block on {1,2}: |psi0> has 4 support strings.
    Strategy st = single_block(3, {1, 2}, 1);
    const Initializer init = build_initializer(st);
    const StateVector psi0 = initial_state(st);

    const dense::Mat u = dense::circuit_matrix(diffusion_circuit(init.circuit, 3));
    dense::Mat r = dense::identity(8);
    for (std::uint64_t i = 0; i < 8; ++i)
        for (std::uint64_t j = 0; j < 8; ++j) {
            r[i][j] = 2.0 * psi0.amps[i] * std::conj(psi0.amps[j]);
            if (i == j) r[i][j] -= 1.0;
        }
    CHECK(dense::phase_distance(u, r) < 1e-10);
}

TEST_CASE("success probability closed form") {
    CHECK(success_probability(1024, 1, 25) == doctest::Approx(0.999461244744).epsilon(1e-10));
    CHECK(success_probability(4, 1, 1) == doctest::Approx(1.0));
    CHECK(success_probability(48, 1, 0) == doctest::Approx(1.0 / 48));
    CHECK_THROWS_AS(success_probability(4, 0, 1), contract_error);
}

TEST_CASE("trace follows sin^2((2k+1) theta) in both modes") {
    OraclePredicate f{8, [](std::uint64_t x) { return x == 0b10010000; }};
    for (RunMode mode : {RunMode::Ideal, RunMode::CircuitExact}) {
        Strategy st = uniform(8);
        const GroverRun res = run(st, f, 12, mode);
        REQUIRE(res.trace.size() == 13);
        for (int k = 0; k <= 12; ++k)
            CHECK(res.trace[k] ==
                  doctest::Approx(success_probability(256, 1, k)).epsilon(1e-9));
    }
}

TEST_CASE("constraint-aware run reaches the closed-form peak") {
    // Block {1,2,3} weight 1, 3 free qubits: |F| = 24.
    Strategy st = single_block(6, {1, 2, 3}, 1);
    CHECK(st.search_space == 24);
    OraclePredicate f{6, [](std::uint64_t x) { return x == 0b101001; }};
    const int kappa = optimal_queries(24, 1);
    const GroverRun res = run(st, f, kappa, RunMode::CircuitExact);
    for (int k = 0; k <= kappa; ++k)
        CHECK(res.trace[k] ==
              doctest::Approx(success_probability(24, 1, k)).epsilon(1e-9));
    // Closed-form peak for |F| = 24 is sin^2(7 asin(1/sqrt(24))) ~ 0.9837.
    CHECK(res.trace.back() > 0.98);
}

TEST_CASE("ideal and circuit-exact agree when both apply") {
    Strategy st = single_block(5, {2, 3, 4}, 1);
    OraclePredicate f{5, [](std::uint64_t x) { return x == 0b00010; }};
    const GroverRun a = run(st, f, 4, RunMode::Ideal);
    const GroverRun b = run(st, f, 4, RunMode::CircuitExact);
    for (std::size_t k = 0; k < a.trace.size(); ++k)
        CHECK(a.trace[k] == doctest::Approx(b.trace[k]).epsilon(1e-9));
}

TEST_CASE("solutions outside the search space are rejected") {
    Strategy st = single_block(4, {1, 2}, 1);
    // 0b0011 has weight 2 on the block: outside F.
    OraclePredicate f{4, [](std::uint64_t x) { return x == 0b0011; }};
    CHECK_THROWS_AS(run(st, f, 3, RunMode::Ideal), contract_error);
}

TEST_CASE("circuit-exact mode requires a circuit-form initializer") {
    Strategy st = single_block(4, {1, 2, 3, 4}, 2);
    OraclePredicate f{4, [](std::uint64_t x) { return x == 0b0011; }};
    CHECK_THROWS_AS(run(st, f, 2, RunMode::CircuitExact), contract_error);
    // Ideal mode covers injected initializers.
    const GroverRun res = run(st, f, 2, RunMode::Ideal);
    CHECK(res.trace[2] ==
          doctest::Approx(success_probability(6, 1, 2)).epsilon(1e-9));
}

TEST_CASE("multiple solutions") {
    Strategy st = uniform(6);
    OraclePredicate f{6, [](std::uint64_t x) { return x < 4; }};
    const int kappa = optimal_queries(64, 4);
    const GroverRun res = run(st, f, kappa, RunMode::CircuitExact);
    for (int k = 0; k <= kappa; ++k)
        CHECK(res.trace[k] ==
              doctest::Approx(success_probability(64, 4, k)).epsilon(1e-9));
}

}  // TEST_SUITE
