#include <doctest.h>

#include <cmath>

#include "qca/resources.hpp"
#include "qca/state_prep.hpp"
#include "qca/transpile.hpp"

using namespace qca;

TEST_SUITE("resources") {

TEST_CASE("tally counts gates and greedy layers") {
    Circuit c(3);
    c.add(Gate::h(0));
    c.add(Gate::h(1));      // parallel with the first
    c.add(Gate::cx(0, 1));  // layer 2
    c.add(Gate::x(2));      // layer 1
    c.add(Gate::cx(1, 2));  // layer 3
    const ResourceTally t = tally(c);
    CHECK(t.total_gates == 5);
    CHECK(t.two_qubit_gates == 2);
    CHECK(t.depth == 3);
}

TEST_CASE("multi-controlled X is one gate unless decomposed") {
    Circuit c(5);
    c.add(Gate::mcx({0, 1, 2, 3}, 4));
    CHECK(tally(c) == ResourceTally{1, 1, 1});
    const ResourceTally d = tally(c, true);
    CHECK(d.total_gates == 5 * 15);  // 2k-3 = 5 Toffolis
    CHECK(d.two_qubit_gates == 5 * 6);
}

TEST_CASE("total resource follows S + (O + D + 2S) kappa") {
    StrategyCost cost;
    cost.prep = {7, 6, 7};
    cost.oracle_cost = 40.0;
    cost.diffusion_core = {23, 1, 21};
    cost.kappa = 7;
    CHECK(total_resource(cost, Metric::TotalGates) ==
          doctest::Approx(7 + (40 + 23 + 14) * 7));
    CHECK(total_resource(cost, Metric::Depth) ==
          doctest::Approx(7 + (40 + 21 + 14) * 7));
}

TEST_CASE("resource law is monotone in each input") {
    const Metric m = Metric::TotalGates;
    StrategyCost base{{10, 4, 8}, 30.0, {20, 6, 15}, 5};
    const double r0 = total_resource(base, m);
    for (long long dk = 1; dk <= 10; ++dk) {
        StrategyCost c = base;
        c.kappa += dk;
        CHECK(total_resource(c, m) > r0);
    }
    for (int ds = 1; ds <= 10; ++ds) {
        StrategyCost c = base;
        c.prep.total_gates += ds;
        CHECK(total_resource(c, m) > r0);
        StrategyCost d = base;
        d.oracle_cost += ds;
        CHECK(total_resource(d, m) > r0);
        StrategyCost e = base;
        e.diffusion_core.total_gates += ds;
        CHECK(total_resource(e, m) > r0);
    }
}

TEST_CASE("efficiency bound") {
    // (2*5+1)/(12-5) * (9-3) - 2*3 = 11/7*6 - 6.
    CHECK(efficiency_bound(9.0, 3.0, 5, 12) ==
          doctest::Approx(11.0 / 7.0 * 6.0 - 6.0));
    CHECK_THROWS_AS(efficiency_bound(9.0, 3.0, 12, 5), contract_error);
    CHECK_THROWS_AS(efficiency_bound(9.0, 3.0, 5, 5), contract_error);
}

TEST_CASE("proposition constants match the published values") {
    CHECK(p1_circuit_rhs(2) > 66.0);
    CHECK(p1_circuit_rhs(2) < 66.2);
    CHECK(p2_circuit_rhs(3) <= 97.0);
    CHECK(p2_circuit_rhs(3) > 90.0);
    CHECK(p3_circuit_rhs(2) > 82.0);
    CHECK(p3_circuit_rhs(2) < 84.0);
    for (int mu = 3; mu <= 16; ++mu)
        CHECK(p1_circuit_rhs(mu) < p1_circuit_rhs(mu - 1));
    CHECK_THROWS_AS(p1_circuit_rhs(1), contract_error);
}

TEST_CASE("proposition_check is consistent with the circuit forms") {
    for (int mu = 2; mu <= 16; ++mu) {
        const PropositionResult p1 =
            proposition_check(Proposition::P1, mu, 2.0 * mu, 0.0, 0.0);
        CHECK(p1.rhs == doctest::Approx(p1_circuit_rhs(mu)).epsilon(1e-12));
    }
    const PropositionResult ok =
        proposition_check(Proposition::P1, 2, 4.0, 0.0, 67.0);
    CHECK(ok.sufficient);
    const PropositionResult no =
        proposition_check(Proposition::P1, 2, 4.0, 0.0, 60.0);
    CHECK(!no.sufficient);
}

TEST_CASE("mcx cost model") {
    CHECK(mcx_cost(1) == ResourceTally{1, 1, 1});
    CHECK(mcx_cost(2).total_gates == 15);
    CHECK(mcx_cost(9).total_gates == 225);
    CHECK(mcx_cost(9).two_qubit_gates == 90);
    CHECK_THROWS_AS(mcx_cost(0), contract_error);
}

TEST_CASE("block tallies from the state-prep builders") {
    CHECK(tally(dicke1_circuit(4)) == ResourceTally{7, 6, 7});
    CHECK(tally(dicke11_circuit(4)).total_gates == 7);
    CHECK(tally(ghz_x_circuit(4, 1)) == ResourceTally{9, 3, 5});
}

}  // TEST_SUITE
