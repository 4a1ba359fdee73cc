#include "qca/transpile.hpp"

#include <algorithm>
#include <cmath>

namespace qca {

namespace {

const double kPi = std::acos(-1.0);

void emit_ry(Circuit& c, int q, double theta) {
    // RY(theta) = RZ(-pi/2) RX(-theta) RZ(pi/2) up to global phase,
    // with RX realized as H RZ H.
    c.add(Gate::p(q, kPi / 2));
    c.add(Gate::h(q));
    c.add(Gate::p(q, -theta));
    c.add(Gate::h(q));
    c.add(Gate::p(q, -kPi / 2));
}

void emit_x(Circuit& c, int q) {
    c.add(Gate::h(q));
    c.add(Gate::p(q, kPi));
    c.add(Gate::h(q));
}

void emit_toffoli(Circuit& c, int a, int b, int t) {
    const double kT = kPi / 4;
    c.add(Gate::h(t));
    c.add(Gate::cx(b, t));
    c.add(Gate::p(t, -kT));
    c.add(Gate::cx(a, t));
    c.add(Gate::p(t, kT));
    c.add(Gate::cx(b, t));
    c.add(Gate::p(t, -kT));
    c.add(Gate::cx(a, t));
    c.add(Gate::p(b, kT));
    c.add(Gate::p(t, kT));
    c.add(Gate::h(t));
    c.add(Gate::cx(a, b));
    c.add(Gate::p(a, kT));
    c.add(Gate::p(b, -kT));
    c.add(Gate::cx(a, b));
}

}  // namespace

bool in_basis(const Circuit& circuit) {
    return std::all_of(circuit.gates.begin(), circuit.gates.end(), [](const Gate& g) {
        return g.kind == GateKind::PhaseRotationZ || g.kind == GateKind::Hadamard ||
               g.kind == GateKind::ControlledNot;
    });
}

Circuit toffoli_network(int c0, int c1, int t, int width) {
    Circuit c(width);
    emit_toffoli(c, c0, c1, t);
    return c;
}

Circuit mcx_vchain(int controls) {
    if (controls < 1) throw contract_error("need at least one control");
    if (controls == 1) {
        Circuit c(2);
        c.add(Gate::cx(0, 1));
        return c;
    }
    const int target = controls;
    const int ancillas = controls - 1;
    Circuit c(controls + 1, ancillas);
    if (controls == 2) {
        c.add(Gate::ccx(0, 1, target));
        return c;
    }
    // Fold controls into an AND chain; the final Toffoli lands on the target,
    // so one allocated ancilla stays idle.
    const int a0 = controls + 1;
    c.add(Gate::ccx(0, 1, a0));
    for (int i = 2; i <= controls - 2; ++i) c.add(Gate::ccx(i, a0 + i - 2, a0 + i - 1));
    c.add(Gate::ccx(controls - 1, a0 + controls - 3, target));
    for (int i = controls - 2; i >= 2; --i) c.add(Gate::ccx(i, a0 + i - 2, a0 + i - 1));
    c.add(Gate::ccx(0, 1, a0));
    return c;
}

Circuit transpile(const Circuit& circuit) {
    // One shared ancilla block, sized for the widest MultiControlledX.
    int ancillas = 0;
    for (const Gate& g : circuit.gates)
        if (g.kind == GateKind::MultiControlledX)
            ancillas = std::max(ancillas, std::max(0, g.control_count() - 1));

    Circuit out(circuit.width, ancillas);
    const int a0 = circuit.width;
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::Hadamard:
            case GateKind::PhaseRotationZ:
            case GateKind::ControlledNot:
                out.add(g);
                break;
            case GateKind::PauliX:
                emit_x(out, g.qubits[0]);
                break;
            case GateKind::PauliZ:
                out.add(Gate::p(g.qubits[0], kPi));
                break;
            case GateKind::RotationY:
                emit_ry(out, g.qubits[0], g.angle);
                break;
            case GateKind::ControlledZ:
                out.add(Gate::h(g.qubits[1]));
                out.add(Gate::cx(g.qubits[0], g.qubits[1]));
                out.add(Gate::h(g.qubits[1]));
                break;
            case GateKind::ControlledRotationY: {
                const int c = g.qubits[0];
                const int t = g.qubits[1];
                out.add(Gate::cx(c, t));
                emit_ry(out, t, -g.angle / 2);
                out.add(Gate::cx(c, t));
                emit_ry(out, t, g.angle / 2);
                break;
            }
            case GateKind::Toffoli:
                emit_toffoli(out, g.qubits[0], g.qubits[1], g.qubits[2]);
                break;
            case GateKind::MultiControlledX: {
                const int k = g.control_count();
                if (k == 0) {
                    emit_x(out, g.target());
                    break;
                }
                const Circuit chain = mcx_vchain(k);
                std::vector<int> mapping(chain.width);
                for (int i = 0; i < k; ++i) mapping[i] = g.qubits[i];
                mapping[k] = g.target();
                for (int i = 0; i < chain.width - (k + 1); ++i)
                    mapping[k + 1 + i] = a0 + i;
                for (Gate cg : chain.gates) {
                    for (int& q : cg.qubits) q = mapping[q];
                    if (cg.kind == GateKind::Toffoli)
                        emit_toffoli(out, cg.qubits[0], cg.qubits[1], cg.qubits[2]);
                    else
                        out.add(cg);
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace qca
