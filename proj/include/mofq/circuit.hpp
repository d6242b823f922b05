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
 * @file circuit.hpp
 * Diagram-to-circuit compilation.
 *
 * Every diagram wire becomes label_width qubits (wire g owns qubits
 * [g*w, (g+1)*w)). Word boxes compile to H plus three parameterized
 * rotations per primary qubit; a two-wire box entangles each adjoint qubit
 * with its primary partner by CNOT. Cups become Bell effects (CNOT then H
 * on the first wire, both qubits post-selected on 0), the BoW merge dot
 * becomes CNOTs between the open wire and each word wire, and stair
 * connectors become controlled-Rz, decomposed into the {H, Rx, Rz, CNOT}
 * gate set with half-angle multipliers.
 *
 * Angles stay symbolic until bound against a ParamStore: a slot value
 * v in [0, 1) binds to the angle multiplier * 2*pi * v.
 */
#include <optional>
#include <vector>

#include "mofq/ansatz.hpp"
#include "mofq/diagram.hpp"
#include "mofq/params.hpp"
#include "mofq/statevector.hpp"

namespace mofq {

/// Symbolic angle: which component slot feeds the gate, scaled how.
struct AngleRef {
    std::string component;
    int slot = 0;
    double multiplier = 1.0;
};

/// A gate whose angle (if any) is still symbolic.
struct SymGate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    std::optional<AngleRef> angle;
};

/**
 * A compiled circuit: gate list in application order plus the measurement
 * layout. open_wires carry the label readout; post_selected qubits are
 * conditioned on 0. The two sets are disjoint and together cover all
 * qubits.
 */
struct ParamCircuit {
    ModelKind model = ModelKind::BoW;
    int label_width = 1;
    int n_qubits = 0;
    std::vector<SymGate> gates;
    std::vector<int> open_wires;
    std::vector<int> post_selected;

    /// Throws unless the layout and every gate reference are consistent.
    void validate() const;
};

ParamCircuit compile_diagram(const StringDiagram &diagram, const AnsatzConfig &ansatz);

/// Resolve every symbolic angle against the store. Throws on a missing
/// component or slot.
std::vector<BoundGate> bind_gates(const ParamCircuit &circuit, const ParamStore &store);

/// Bind and simulate, returning the final state.
Statevector run_circuit(const ParamCircuit &circuit, const ParamStore &store);

} // namespace mofq
