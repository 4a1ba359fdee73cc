#include "qca/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace qca {

Gate Gate::mcx(std::vector<int> controls, int t) {
    Gate g;
    g.kind = GateKind::MultiControlledX;
    g.qubits = std::move(controls);
    g.qubits.push_back(t);
    return g;
}

void Circuit::add(Gate g) {
    if (g.qubits.empty()) throw contract_error("gate with no qubits");
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        if (g.qubits[i] < 0 || g.qubits[i] >= width)
            throw contract_error("gate qubit index out of range");
        for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
            if (g.qubits[i] == g.qubits[j])
                throw contract_error("gate qubit indices must be distinct");
    }
    if (g.has_angle() && !std::isfinite(g.angle))
        throw contract_error("gate angle must be finite");
    gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
    if (other.width > width) throw contract_error("appended circuit too wide");
    for (const Gate& g : other.gates) add(g);
}

void Circuit::append_mapped(const Circuit& block, const std::vector<int>& mapping) {
    if (static_cast<int>(mapping.size()) < block.width)
        throw contract_error("qubit mapping shorter than block width");
    for (Gate g : block.gates) {
        for (int& q : g.qubits) q = mapping[q];
        add(std::move(g));
    }
}

Circuit Circuit::inverted() const {
    Circuit inv;
    inv.width = width;
    inv.ancilla_offset = ancilla_offset;
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
        inv.gates.push_back(it->inverse());
    return inv;
}

}  // namespace qca
