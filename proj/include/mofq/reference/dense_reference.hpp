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
 * @file dense_reference.hpp
 * Serial reference simulator.
 *
 * Each gate is expanded to its full 2^n x 2^n unitary and applied by dense
 * matrix arithmetic — no pair-indexing tricks, no OpenMP, nothing shared
 * with the fast kernels except the BoundGate description and the
 * qubit-0-is-MSB convention. Tests use it as the ground truth the in-place
 * kernels are checked against, and the bench tool uses it as the serial
 * baseline. Keep it boring.
 */
#include <complex>
#include <vector>

#include "mofq/statevector.hpp"

namespace mofq::ref {

using CMat = std::vector<std::vector<std::complex<double>>>;

/// Full 2^n x 2^n matrix of one gate embedded at its qubits.
CMat gate_matrix(const BoundGate &gate, int n_qubits);

/// Dense product a * b.
CMat matmul(const CMat &a, const CMat &b);

/// Chain product G_k * ... * G_1 of the whole circuit as one unitary.
CMat full_unitary(int n_qubits, const std::vector<BoundGate> &gates);

/// Amplitudes of G_k * ... * G_1 |0...0>, applying one full gate matrix at a
/// time to the vector.
std::vector<std::complex<double>> simulate(int n_qubits, const std::vector<BoundGate> &gates);

} // namespace mofq::ref
