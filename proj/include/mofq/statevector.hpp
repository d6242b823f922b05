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
#pragma once
/**
 * @file statevector.hpp
 * Dense statevector simulator and measurement pipeline.
 *
 * Conventions used throughout the project:
 *  - qubit 0 is the most significant bit of a bitstring key, so basis index
 *    i has qubit q set iff (i >> (n_qubits - 1 - q)) & 1;
 *  - gate set is restricted to {H, Rx, Rz, CNOT};
 *  - Rx(t) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]],
 *    Rz(t) = diag(e^{-it/2}, e^{+it/2}).
 *
 * Gate kernels update amplitude pairs in place and parallelize with OpenMP
 * above a size cutoff; the loops write disjoint indices and perform no
 * floating-point reductions, so results are bit-identical for any thread
 * count. A deliberately naive serial implementation lives in
 * reference/dense_reference.hpp for cross-checking.
 */
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mofq/common.hpp"

namespace mofq {

enum class GateKind { H, Rx, Rz, CNOT };

/**
 * A gate with concrete qubits and (for rotations) a concrete angle.
 * Single-qubit gates use q0 as the target and leave q1 = -1; CNOT uses
 * q0 = control, q1 = target.
 */
struct BoundGate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    double angle = 0.0;
};

inline BoundGate gate_h(int q) { return {GateKind::H, q, -1, 0.0}; }
inline BoundGate gate_rx(int q, double t) { return {GateKind::Rx, q, -1, t}; }
inline BoundGate gate_rz(int q, double t) { return {GateKind::Rz, q, -1, t}; }
inline BoundGate gate_cnot(int c, int t) { return {GateKind::CNOT, c, t, 0.0}; }

/// Maximum qubit count the dense simulator accepts.
inline constexpr int kMaxQubits = 20;

/**
 * Dense complex amplitude vector over n qubits, initialized to |0...0>.
 */
class Statevector {
  public:
    explicit Statevector(int n_qubits);

    void apply(const BoundGate &gate);
    void apply(const std::vector<BoundGate> &gates);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<std::complex<double>> &amps() const { return amps_; }

    /// |amplitude|^2 per basis state.
    std::vector<double> probabilities() const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

/**
 * Measured bitstring counts. Keys are bitstrings of length n_qubits with
 * qubit 0 leftmost; only nonzero counts are stored, and stored counts sum
 * to total.
 */
struct ShotDistribution {
    int n_qubits = 0;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

/**
 * Sample `shots` full-register measurements from the state's exact
 * probabilities. Identical (state, shots, seed) triples give identical
 * counts on every platform. shots must be > 0.
 */
ShotDistribution sample_shots(const Statevector &state, std::uint64_t shots, std::uint64_t seed);

/**
 * Result of conditioning a distribution on a set of qubits reading 0.
 */
struct PostSelectResult {
    ShotDistribution dist;       ///< Keys projected onto the remaining qubits.
    double retained_fraction = 0.0;
};

/**
 * Keep only the shots whose bits at `zero_qubits` are all 0 and project the
 * keys onto the remaining qubits (ascending qubit order). zero_qubits must
 * be in range and duplicate-free. retained_fraction is retained/total
 * (0 when the input holds no shots).
 */
PostSelectResult post_select(const ShotDistribution &dist, const std::vector<int> &zero_qubits);

/// Probabilities over label bitstrings; sums to 1 within 1e-9.
using ProbVector = std::vector<double>;

/// Index of the largest entry; ties resolve to the lower index.
std::size_t argmax(const ProbVector &p);

/**
 * Normalize a distribution over `width`-bit keys into a ProbVector of size
 * 2^width indexed by the bitstring value (qubit-0-leftmost). Returns nullopt
 * when the distribution holds no shots (empty retention — the caller decides
 * the fallback). All keys must have length `width`.
 */
std::optional<ProbVector> vectorize(const ShotDistribution &dist, int width);

/**
 * Exact-probability counterpart of sample_shots + post_select + vectorize:
 * the conditional distribution over the non-`zero_qubits` bits given that
 * every qubit in `zero_qubits` reads 0, with no shot noise. Returns nullopt
 * when the retained probability mass vanishes. If `retained_fraction` is
 * non-null it receives the retained mass.
 */
std::optional<ProbVector> exact_class_probs(const Statevector &state,
                                            const std::vector<int> &zero_qubits,
                                            double *retained_fraction = nullptr);

} // namespace mofq
