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
//
// Micro-benchmark for the statevector kernels.
//
// Three sections:
//  1. in-place kernels vs. the serial dense reference on small registers
//     (also reports the max amplitude deviation between the two);
//  2. kernel throughput on large registers, where the dense reference is
//     no longer practical;
//  3. OpenMP thread scaling on a large register, checking that the
//     parallel result is bit-identical to the single-threaded one.
#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mofq/reference/dense_reference.hpp"
#include "mofq/rng.hpp"
#include "mofq/statevector.hpp"

namespace {

using mofq::BoundGate;
using mofq::Statevector;

/// Layers of random H/Rx/Rz on every qubit with one random CNOT per layer.
std::vector<BoundGate> random_circuit(int n_qubits, int layers, std::uint64_t seed) {
    mofq::Rng rng(mofq::mix_seed(seed, 0xbe9c));
    std::vector<BoundGate> gates;
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            switch (rng.below(3)) {
            case 0:
                gates.push_back(mofq::gate_h(q));
                break;
            case 1:
                gates.push_back(mofq::gate_rx(q, 2.0 * std::numbers::pi * rng.uniform01()));
                break;
            default:
                gates.push_back(mofq::gate_rz(q, 2.0 * std::numbers::pi * rng.uniform01()));
                break;
            }
        }
        if (n_qubits >= 2) {
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_qubits)));
            int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_qubits - 1)));
            if (t >= c) {
                ++t;
            }
            gates.push_back(mofq::gate_cnot(c, t));
        }
    }
    return gates;
}

template <typename F> double seconds(F &&body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double max_abs_diff(const std::vector<std::complex<double>> &a,
                    const std::vector<std::complex<double>> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

void bench_vs_reference() {
    std::printf("== in-place kernels vs. serial dense reference ==\n");
    std::printf("%7s %7s %12s %12s %9s %12s\n", "qubits", "gates", "kernel (s)", "dense (s)",
                "speedup", "max |diff|");
    for (const int n : {6, 8, 10}) {
        const auto gates = random_circuit(n, 4, 7);
        Statevector state(n);
        const double t_fast = seconds([&] { state.apply(gates); });
        std::vector<std::complex<double>> ref_amps;
        const double t_ref = seconds([&] { ref_amps = mofq::ref::simulate(n, gates); });
        std::printf("%7d %7zu %12.6f %12.6f %8.1fx %12.3e\n", n, gates.size(), t_fast, t_ref,
                    t_ref / std::max(t_fast, 1e-12), max_abs_diff(state.amps(), ref_amps));
    }
}

void bench_throughput() {
    std::printf("\n== kernel throughput ==\n");
    std::printf("%7s %7s %12s %16s\n", "qubits", "gates", "time (s)", "amp-updates/s");
    for (const int n : {12, 14, 16, 18, 20}) {
        const auto gates = random_circuit(n, 4, 11);
        Statevector state(n);
        const double t = seconds([&] { state.apply(gates); });
        // Every gate touches all 2^n amplitudes once.
        const double updates =
            static_cast<double>(gates.size()) * static_cast<double>(std::size_t{1} << n);
        std::printf("%7d %7zu %12.6f %16.3e\n", n, gates.size(), t,
                    updates / std::max(t, 1e-12));
    }
}

void bench_threads() {
    std::printf("\n== thread scaling (18 qubits) ==\n");
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    const auto gates = random_circuit(18, 6, 13);

    std::vector<std::complex<double>> serial_amps;
    double t_serial = 0.0;
    {
#ifdef _OPENMP
        omp_set_num_threads(1);
#endif
        Statevector state(18);
        t_serial = seconds([&] { state.apply(gates); });
        serial_amps = state.amps();
    }

#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    Statevector state(18);
    const double t_parallel = seconds([&] { state.apply(gates); });

    const bool identical = std::equal(serial_amps.begin(), serial_amps.end(),
                                      state.amps().begin(), state.amps().end(),
                                      [](const std::complex<double> &a,
                                         const std::complex<double> &b) { return a == b; });
    std::printf("1 thread: %.6f s, %d threads: %.6f s, speedup %.2fx, bit-identical: %s\n",
                t_serial, max_threads, t_parallel, t_serial / std::max(t_parallel, 1e-12),
                identical ? "yes" : "NO");
}

} // namespace

int main() {
    bench_vs_reference();
    bench_throughput();
    bench_threads();
    return 0;
}
