#pragma once

#include <cstdint>
#include <vector>

#include "qca/errors.hpp"

namespace qca {

enum class GateKind {
    Hadamard,
    PauliX,
    PauliZ,
    PhaseRotationZ,      // diag(1, e^{i*angle})
    RotationY,           // [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]]
    ControlledNot,       // qubits = {control, target}
    ControlledZ,
    ControlledRotationY, // qubits = {control, target}
    Toffoli,             // qubits = {control, control, target}
    MultiControlledX,    // qubits = {controls..., target}
};

struct Gate {
    GateKind kind;
    std::vector<int> qubits;  // controls first, target last
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::Hadamard, {q}}; }
    static Gate x(int q) { return {GateKind::PauliX, {q}}; }
    static Gate z(int q) { return {GateKind::PauliZ, {q}}; }
    static Gate p(int q, double a) { return {GateKind::PhaseRotationZ, {q}, a}; }
    static Gate ry(int q, double a) { return {GateKind::RotationY, {q}, a}; }
    static Gate cx(int c, int t) { return {GateKind::ControlledNot, {c, t}}; }
    static Gate cz(int c, int t) { return {GateKind::ControlledZ, {c, t}}; }
    static Gate cry(int c, int t, double a) {
        return {GateKind::ControlledRotationY, {c, t}, a};
    }
    static Gate ccx(int c0, int c1, int t) { return {GateKind::Toffoli, {c0, c1, t}}; }
    static Gate mcx(std::vector<int> controls, int t);

    int target() const { return qubits.back(); }
    int control_count() const { return static_cast<int>(qubits.size()) - 1; }
    bool multi_qubit() const { return qubits.size() >= 2; }
    bool has_angle() const {
        return kind == GateKind::PhaseRotationZ || kind == GateKind::RotationY ||
               kind == GateKind::ControlledRotationY;
    }

    Gate inverse() const {
        Gate g = *this;
        if (g.has_angle()) g.angle = -g.angle;
        return g;
    }
};

struct Circuit {
    int width = 0;
    int ancilla_offset = 0;  // first ancilla index; == width when there are none
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int width, int ancillas = 0)
        : width(width + ancillas), ancilla_offset(width) {}

    int data_qubits() const { return ancilla_offset; }

    void add(Gate g);
    void append(const Circuit& other);
    // Appends `block`, relabeling its qubit i to mapping[i].
    void append_mapped(const Circuit& block, const std::vector<int>& mapping);

    // Reversed gate order with negated angles; composes with the original to identity.
    Circuit inverted() const;
};

}  // namespace qca
