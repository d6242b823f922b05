// Copyright 2026 The mofqnlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "mofq/reference/dense_reference.hpp"

#include <array>
#include <cmath>

namespace mofq::ref {

namespace {

using C = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// 2x2 matrix of a single-qubit gate.
std::array<std::array<C, 2>, 2> small_matrix(const BoundGate &gate) {
    switch (gate.kind) {
    case GateKind::H:
        return {{{C{kInvSqrt2}, C{kInvSqrt2}}, {C{kInvSqrt2}, C{-kInvSqrt2}}}};
    case GateKind::Rx: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        return {{{C{c}, C{0.0, -s}}, {C{0.0, -s}, C{c}}}};
    }
    case GateKind::Rz:
        return {{{std::polar(1.0, -gate.angle / 2.0), C{0.0}},
                 {C{0.0}, std::polar(1.0, gate.angle / 2.0)}}};
    default:
        throw Error("dense_reference: not a single-qubit gate");
    }
}

} // namespace

CMat gate_matrix(const BoundGate &gate, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    CMat m(dim, std::vector<C>(dim, C{0.0}));

    if (gate.kind == GateKind::CNOT) {
        // Permutation matrix: column c maps to row c, or to c with the
        // target bit flipped when the control bit of c is set.
        const std::size_t cmask = std::size_t{1} << (n_qubits - 1 - gate.q0);
        const std::size_t tmask = std::size_t{1} << (n_qubits - 1 - gate.q1);
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r = (c & cmask) ? (c ^ tmask) : c;
            m[r][c] = C{1.0};
        }
        return m;
    }

    const auto u = small_matrix(gate);
    const std::size_t qmask = std::size_t{1} << (n_qubits - 1 - gate.q0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~qmask) != (c & ~qmask)) {
                continue; // Identity on every other qubit.
            }
            m[r][c] = u[(r & qmask) ? 1 : 0][(c & qmask) ? 1 : 0];
        }
    }
    return m;
}

CMat matmul(const CMat &a, const CMat &b) {
    const std::size_t n = a.size();
    CMat out(n, std::vector<C>(n, C{0.0}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const C aik = a[i][k];
            if (aik == C{0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    return out;
}

CMat full_unitary(int n_qubits, const std::vector<BoundGate> &gates) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    CMat u(dim, std::vector<C>(dim, C{0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        u[i][i] = C{1.0};
    }
    for (const auto &g : gates) {
        u = matmul(gate_matrix(g, n_qubits), u);
    }
    return u;
}

std::vector<C> simulate(int n_qubits, const std::vector<BoundGate> &gates) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<C> state(dim, C{0.0});
    state[0] = C{1.0};
    for (const auto &g : gates) {
        const CMat m = gate_matrix(g, n_qubits);
        std::vector<C> next(dim, C{0.0});
        for (std::size_t r = 0; r < dim; ++r) {
            C acc{0.0};
            for (std::size_t c = 0; c < dim; ++c) {
                acc += m[r][c] * state[c];
            }
            next[r] = acc;
        }
        state = std::move(next);
    }
    return state;
}

} // namespace mofq::ref
