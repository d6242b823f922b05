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
#include "mofq/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mofq/rng.hpp"

namespace mofq {

namespace {

// Kernels below this many amplitudes stay serial; the OpenMP fork/join
// overhead dwarfs the work on the small circuits the compiler emits.
constexpr std::size_t kParallelCutoff = std::size_t{1} << 14;

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// i0 of the k-th amplitude pair (i0, i0|mask) for a single-qubit kernel.
inline std::size_t pair_base(std::size_t k, std::size_t mask) {
    const std::size_t low = k & (mask - 1);
    const std::size_t high = (k ^ low) << 1;
    return high | low;
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error("Statevector: qubit count must be in [1, " + std::to_string(kMaxQubits) +
                    "], got " + std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

void Statevector::apply(const BoundGate &gate) {
    const auto check_qubit = [&](int q) {
        if (q < 0 || q >= n_qubits_) {
            throw Error("Statevector: qubit index " + std::to_string(q) + " out of range for " +
                        std::to_string(n_qubits_) + " qubits");
        }
    };
    check_qubit(gate.q0);

    auto *amp = amps_.data();
    const std::size_t dim = amps_.size();
    const std::size_t half = dim / 2;
    // Qubit 0 is the most significant bit of the basis index.
    const std::size_t mask0 = std::size_t{1} << (n_qubits_ - 1 - gate.q0);

    switch (gate.kind) {
    case GateKind::H: {
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
        for (std::size_t k = 0; k < half; ++k) {
            const std::size_t i0 = pair_base(k, mask0);
            const std::size_t i1 = i0 | mask0;
            const auto a0 = amp[i0];
            const auto a1 = amp[i1];
            amp[i0] = (a0 + a1) * kInvSqrt2;
            amp[i1] = (a0 - a1) * kInvSqrt2;
        }
        break;
    }
    case GateKind::Rx: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        const std::complex<double> mis{0.0, -s}; // -i sin(t/2)
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
        for (std::size_t k = 0; k < half; ++k) {
            const std::size_t i0 = pair_base(k, mask0);
            const std::size_t i1 = i0 | mask0;
            const auto a0 = amp[i0];
            const auto a1 = amp[i1];
            amp[i0] = c * a0 + mis * a1;
            amp[i1] = mis * a0 + c * a1;
        }
        break;
    }
    case GateKind::Rz: {
        const std::complex<double> e0 = std::polar(1.0, -gate.angle / 2.0);
        const std::complex<double> e1 = std::polar(1.0, gate.angle / 2.0);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
        for (std::size_t k = 0; k < half; ++k) {
            const std::size_t i0 = pair_base(k, mask0);
            const std::size_t i1 = i0 | mask0;
            amp[i0] *= e0;
            amp[i1] *= e1;
        }
        break;
    }
    case GateKind::CNOT: {
        check_qubit(gate.q1);
        if (gate.q1 == gate.q0) {
            throw Error("Statevector: CNOT control and target must differ");
        }
        const std::size_t cmask = mask0;
        const std::size_t tmask = std::size_t{1} << (n_qubits_ - 1 - gate.q1);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) != 0 && (i & tmask) == 0) {
                std::swap(amp[i], amp[i | tmask]);
            }
        }
        break;
    }
    }
}

void Statevector::apply(const std::vector<BoundGate> &gates) {
    for (const auto &g : gates) {
        apply(g);
    }
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps_.size());
    const std::size_t dim = amps_.size();
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::size_t i = 0; i < dim; ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

namespace {

std::string index_to_key(std::size_t index, int width) {
    std::string key(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((index >> (width - 1 - b)) & 1u) {
            key[static_cast<std::size_t>(b)] = '1';
        }
    }
    return key;
}

} // namespace

ShotDistribution sample_shots(const Statevector &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error("sample_shots: shots must be > 0");
    }
    const std::vector<double> probs = state.probabilities();
    Rng rng(seed);
    const std::vector<std::uint64_t> counts = multinomial(probs, shots, rng);

    ShotDistribution dist;
    dist.n_qubits = state.n_qubits();
    dist.total = shots;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            dist.counts.emplace(index_to_key(i, dist.n_qubits), counts[i]);
        }
    }
    return dist;
}

PostSelectResult post_select(const ShotDistribution &dist, const std::vector<int> &zero_qubits) {
    std::vector<bool> drop(static_cast<std::size_t>(dist.n_qubits), false);
    for (int q : zero_qubits) {
        if (q < 0 || q >= dist.n_qubits) {
            throw Error("post_select: qubit index " + std::to_string(q) + " out of range");
        }
        if (drop[static_cast<std::size_t>(q)]) {
            throw Error("post_select: duplicate qubit index " + std::to_string(q));
        }
        drop[static_cast<std::size_t>(q)] = true;
    }

    PostSelectResult result;
    result.dist.n_qubits = dist.n_qubits - static_cast<int>(zero_qubits.size());
    std::uint64_t retained = 0;
    for (const auto &[key, count] : dist.counts) {
        bool keep = true;
        for (int q : zero_qubits) {
            if (key[static_cast<std::size_t>(q)] != '0') {
                keep = false;
                break;
            }
        }
        if (!keep) {
            continue;
        }
        std::string projected;
        projected.reserve(static_cast<std::size_t>(result.dist.n_qubits));
        for (std::size_t b = 0; b < key.size(); ++b) {
            if (!drop[b]) {
                projected.push_back(key[b]);
            }
        }
        result.dist.counts[projected] += count;
        retained += count;
    }
    result.dist.total = retained;
    result.retained_fraction =
        dist.total == 0 ? 0.0
                        : static_cast<double>(retained) / static_cast<double>(dist.total);
    return result;
}

std::size_t argmax(const ProbVector &p) {
    if (p.empty()) {
        throw Error("argmax: empty probability vector");
    }
    return static_cast<std::size_t>(
        std::distance(p.begin(), std::max_element(p.begin(), p.end())));
}

std::optional<ProbVector> vectorize(const ShotDistribution &dist, int width) {
    if (width < 0 || width > kMaxQubits) {
        throw Error("vectorize: width out of range");
    }
    if (dist.total == 0) {
        return std::nullopt; // Empty retention: the caller chooses the fallback.
    }
    ProbVector p(std::size_t{1} << width, 0.0);
    for (const auto &[key, count] : dist.counts) {
        if (static_cast<int>(key.size()) != width) {
            throw Error("vectorize: key \"" + key + "\" does not have width " +
                        std::to_string(width));
        }
        std::size_t index = 0;
        for (char ch : key) {
            index = (index << 1) | static_cast<std::size_t>(ch == '1');
        }
        p[index] += static_cast<double>(count) / static_cast<double>(dist.total);
    }
    return p;
}

std::optional<ProbVector> exact_class_probs(const Statevector &state,
                                            const std::vector<int> &zero_qubits,
                                            double *retained_fraction) {
    const int n = state.n_qubits();
    std::size_t zero_mask = 0;
    std::vector<bool> drop(static_cast<std::size_t>(n), false);
    for (int q : zero_qubits) {
        if (q < 0 || q >= n) {
            throw Error("exact_class_probs: qubit index " + std::to_string(q) + " out of range");
        }
        if (drop[static_cast<std::size_t>(q)]) {
            throw Error("exact_class_probs: duplicate qubit index " + std::to_string(q));
        }
        drop[static_cast<std::size_t>(q)] = true;
        zero_mask |= std::size_t{1} << (n - 1 - q);
    }
    const int width = n - static_cast<int>(zero_qubits.size());

    ProbVector p(std::size_t{1} << width, 0.0);
    double retained = 0.0;
    const auto &amps = state.amps();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & zero_mask) != 0) {
            continue;
        }
        // Compact the non-dropped bits of i (MSB-first) into the label index.
        std::size_t index = 0;
        for (int q = 0; q < n; ++q) {
            if (!drop[static_cast<std::size_t>(q)]) {
                index = (index << 1) | ((i >> (n - 1 - q)) & 1u);
            }
        }
        const double w = std::norm(amps[i]);
        p[index] += w;
        retained += w;
    }
    if (retained_fraction != nullptr) {
        *retained_fraction = retained;
    }
    if (retained < 1e-30) {
        return std::nullopt;
    }
    for (double &v : p) {
        v /= retained;
    }
    return p;
}

} // namespace mofq
