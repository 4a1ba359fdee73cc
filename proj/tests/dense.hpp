// Dense-matrix reference implementations used as independent oracles.
// Gate action is written out from the textbook definitions, column by
// column, with no code shared with the library's stride kernels.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qca/circuit.hpp"

namespace dense {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<Vec>;  // Mat[row][col]

inline Mat identity(std::size_t dim) {
    Mat m(dim, Vec(dim, C{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec out(m.size(), C{0.0, 0.0});
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t dim = a.size();
    Mat out(dim, Vec(dim, C{0.0, 0.0}));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) {
            if (a[r][k] == C{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < dim; ++c) out[r][c] += a[r][k] * b[k][c];
        }
    return out;
}

// Column `col` of the gate's unitary: the image of basis state |col>.
inline Vec gate_column(const qca::Gate& g, int n, std::uint64_t col) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Vec out(dim, C{0.0, 0.0});
    const auto bit = [&](int q) { return (col >> q) & 1; };
    const auto flip = [&](int q) { return col ^ (std::uint64_t{1} << q); };
    using qca::GateKind;
    switch (g.kind) {
        case GateKind::Hadamard: {
            const int q = g.qubits[0];
            const double s = 1.0 / std::sqrt(2.0);
            out[col & ~(std::uint64_t{1} << q)] = s;
            out[col | (std::uint64_t{1} << q)] = bit(q) ? -s : s;
            break;
        }
        case GateKind::PauliX:
            out[flip(g.qubits[0])] = 1.0;
            break;
        case GateKind::PauliZ:
            out[col] = bit(g.qubits[0]) ? -1.0 : 1.0;
            break;
        case GateKind::PhaseRotationZ:
            out[col] = bit(g.qubits[0]) ? std::polar(1.0, g.angle) : C{1.0, 0.0};
            break;
        case GateKind::RotationY: {
            const int q = g.qubits[0];
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            if (bit(q) == 0) {
                out[col] = c;
                out[flip(q)] = s;
            } else {
                out[flip(q)] = -s;
                out[col] = c;
            }
            break;
        }
        case GateKind::ControlledNot:
            out[bit(g.qubits[0]) ? flip(g.qubits[1]) : col] = 1.0;
            break;
        case GateKind::ControlledZ:
            out[col] = bit(g.qubits[0]) && bit(g.qubits[1]) ? -1.0 : 1.0;
            break;
        case GateKind::ControlledRotationY: {
            const int q = g.qubits[1];
            if (!bit(g.qubits[0])) {
                out[col] = 1.0;
                break;
            }
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            if (bit(q) == 0) {
                out[col] = c;
                out[flip(q)] = s;
            } else {
                out[flip(q)] = -s;
                out[col] = c;
            }
            break;
        }
        case GateKind::Toffoli:
            out[bit(g.qubits[0]) && bit(g.qubits[1]) ? flip(g.qubits[2]) : col] = 1.0;
            break;
        case GateKind::MultiControlledX: {
            bool all = true;
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i)
                all = all && bit(g.qubits[i]);
            out[all ? flip(g.qubits.back()) : col] = 1.0;
            break;
        }
    }
    return out;
}

inline Mat gate_matrix(const qca::Gate& g, int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Mat m(dim, Vec(dim, C{0.0, 0.0}));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const Vec column = gate_column(g, n, col);
        for (std::uint64_t row = 0; row < dim; ++row) m[row][col] = column[row];
    }
    return m;
}

inline Mat circuit_matrix(const qca::Circuit& c) {
    Mat m = identity(std::uint64_t{1} << c.width);
    for (const qca::Gate& g : c.gates) m = mat_mul(gate_matrix(g, c.width), m);
    return m;
}

// Max |a - phase*b| over entries, after fixing the phase from the largest
// entry of b. Returns a large value when b is (near) zero where a is not.
inline double phase_distance(const Mat& a, const Mat& b) {
    C num{0.0, 0.0};
    double best = -1.0;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (std::abs(b[r][c]) > best) {
                best = std::abs(b[r][c]);
                num = a[r][c] / b[r][c];
            }
    const C phase = num / std::abs(num);
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            worst = std::max(worst, std::abs(a[r][c] - phase * b[r][c]));
    return worst;
}

}  // namespace dense
