#include <doctest.h>

#include <cmath>

#include "dense.hpp"
#include "qca/grover.hpp"
#include "qca/resources.hpp"
#include "qca/state_prep.hpp"
#include "qca/transpile.hpp"

using namespace qca;

namespace {

// Checks U(transpiled) restricted to ancillas-in-|0> equals U(original) up to
// one global phase shared by every column.
void check_equivalent(const Circuit& original) {
    const Circuit t = transpile(original);
    REQUIRE(in_basis(t));
    const int n = original.width;
    const dense::Mat u = dense::circuit_matrix(original);
    const dense::Mat v = dense::circuit_matrix(t);
    // Embed: data columns with ancilla bits zero.
    dense::Mat v_data(std::uint64_t{1} << n,
                      dense::Vec(std::uint64_t{1} << n, dense::C{0, 0}));
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t col = 0; col < dim; ++col) {
        for (std::uint64_t row = 0; row < v.size(); ++row) {
            const dense::C a = v[row][col];
            if (std::abs(a) < 1e-12) continue;
            // Ancillas must return to |0>.
            REQUIRE(row < dim);
            v_data[row][col] = a;
        }
    }
    CHECK(dense::phase_distance(v_data, u) < 1e-8);
}

}  // namespace

TEST_SUITE("transpile") {

TEST_CASE("basis membership") {
    Circuit c(2);
    c.add(Gate::h(0));
    c.add(Gate::p(1, 0.3));
    c.add(Gate::cx(0, 1));
    CHECK(in_basis(c));
    c.add(Gate::x(0));
    CHECK(!in_basis(c));
}

TEST_CASE("X decomposes to H P(pi) H") {
    Circuit c(1);
    c.add(Gate::x(0));
    const Circuit t = transpile(c);
    REQUIRE(t.gates.size() == 3);
    CHECK(t.gates[0].kind == GateKind::Hadamard);
    CHECK(t.gates[1].kind == GateKind::PhaseRotationZ);
    CHECK(t.gates[1].angle == doctest::Approx(std::acos(-1.0)));
    CHECK(t.gates[2].kind == GateKind::Hadamard);
    check_equivalent(c);
}

TEST_CASE("every single-gate decomposition is unitary-equivalent") {
    const auto single = [](Gate g, int width) {
        Circuit c(width);
        c.add(g);
        return c;
    };
    check_equivalent(single(Gate::z(0), 1));
    check_equivalent(single(Gate::ry(0, 0.83), 1));
    check_equivalent(single(Gate::ry(0, -2.4), 1));
    check_equivalent(single(Gate::p(0, 1.1), 1));
    check_equivalent(single(Gate::cx(0, 1), 2));
    check_equivalent(single(Gate::cz(0, 1), 2));
    check_equivalent(single(Gate::cry(1, 0, 1.9), 2));
    check_equivalent(single(Gate::ccx(0, 1, 2), 3));
    check_equivalent(single(Gate::ccx(2, 0, 1), 3));
    check_equivalent(single(Gate::mcx({0, 1}, 2), 3));
    check_equivalent(single(Gate::mcx({0, 1, 2}, 3), 4));
    check_equivalent(single(Gate::mcx({3, 1, 0}, 2), 4));
}

TEST_CASE("builder circuits survive transpilation") {
    for (int mu = 2; mu <= 5; ++mu) {
        check_equivalent(dicke1_circuit(mu));
        check_equivalent(dicke11_circuit(mu));
        check_equivalent(ghz_x_circuit(mu, 0));
        check_equivalent(ghz_x_circuit(mu, 1));
    }
    // A small diffusion operator, MCX included.
    check_equivalent(diffusion_circuit(dicke1_circuit(4), 4));
}

TEST_CASE("Toffoli network shape") {
    const Circuit t = toffoli_network(0, 1, 2, 3);
    const ResourceTally counts = tally(t);
    CHECK(counts.total_gates == 15);
    CHECK(counts.two_qubit_gates == 6);
    CHECK(in_basis(t));
}

TEST_CASE("V-chain structure") {
    CHECK_THROWS_AS(mcx_vchain(0), contract_error);
    CHECK(mcx_vchain(1).gates.size() == 1);
    CHECK(mcx_vchain(2).gates.size() == 1);
    for (int k = 3; k <= 9; ++k) {
        const Circuit c = mcx_vchain(k);
        CHECK(static_cast<int>(c.gates.size()) == 2 * k - 3);
        // k-1 ancillas allocated (one idle past the final Toffoli).
        CHECK(c.width - c.data_qubits() == k - 1);
        for (const Gate& g : c.gates) CHECK(g.kind == GateKind::Toffoli);
    }
    // 15 Toffolis at 15 gates each after expansion.
    const ResourceTally nine = tally(transpile(mcx_vchain(9)));
    CHECK(nine.total_gates == 225);
    CHECK(nine.two_qubit_gates == 90);
}

TEST_CASE("transpiled output is always in basis") {
    const Circuit d = diffusion_circuit(ghz_x_circuit(5, 1), 5);
    const Circuit t = transpile(d);
    CHECK(in_basis(t));
    CHECK(t.width - t.data_qubits() == 3);  // 4-control V-chain
}

}  // TEST_SUITE
