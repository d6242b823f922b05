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
#include "mofq/circuit.hpp"

#include <algorithm>
#include <numbers>

namespace mofq {

namespace {

/// Index of the wire carrying a box's parameters: its single wire, or the
/// plain-typed wire of a two-wire box.
int primary_wire_of(const Box &box) {
    if (box.types.size() == 1) {
        return 0;
    }
    for (std::size_t i = 0; i < box.types.size(); ++i) {
        if (box.types[i].adj == 0) {
            return static_cast<int>(i);
        }
    }
    throw Error("compile_diagram: box \"" + box.component + "\" has no plain wire");
}

} // namespace

void ParamCircuit::validate() const {
    std::vector<int> seen(static_cast<std::size_t>(n_qubits), 0);
    const auto mark = [&](const std::vector<int> &qs) {
        for (int q : qs) {
            if (q < 0 || q >= n_qubits) {
                throw Error("ParamCircuit: wire qubit out of range");
            }
            if (seen[static_cast<std::size_t>(q)]++) {
                throw Error("ParamCircuit: qubit " + std::to_string(q) +
                            " listed more than once");
            }
        }
    };
    mark(open_wires);
    mark(post_selected);
    // Unmentioned qubits would be traced out implicitly; the compiler never
    // produces them, and the evaluation pipeline does not support them.
    for (int q = 0; q < n_qubits; ++q) {
        if (seen[static_cast<std::size_t>(q)] == 0) {
            throw Error("ParamCircuit: qubit " + std::to_string(q) +
                        " is neither open nor post-selected");
        }
    }
    for (const auto &g : gates) {
        if (g.q0 < 0 || g.q0 >= n_qubits ||
            (g.kind == GateKind::CNOT && (g.q1 < 0 || g.q1 >= n_qubits || g.q1 == g.q0))) {
            throw Error("ParamCircuit: gate references a bad qubit");
        }
        const bool needs_angle = g.kind == GateKind::Rx || g.kind == GateKind::Rz;
        if (needs_angle != g.angle.has_value()) {
            throw Error("ParamCircuit: rotation gates (and only those) carry angles");
        }
    }
}

ParamCircuit compile_diagram(const StringDiagram &diagram, const AnsatzConfig &ansatz) {
    ansatz.validate();
    const int w = diagram.label_width;

    ParamCircuit pc;
    pc.model = diagram.model;
    pc.label_width = w;
    pc.n_qubits = diagram.n_wires() * w;
    if (pc.n_qubits > kMaxQubits) {
        throw Error("compile_diagram: " + std::to_string(pc.n_qubits) +
                    " qubits exceed the simulator bound");
    }

    const auto qubit_of = [w](int wire, int k) { return wire * w + k; };
    const auto emit_rot = [&](char axis, int q, AngleRef ref) {
        pc.gates.push_back({axis == 'x' ? GateKind::Rx : GateKind::Rz, q, -1, std::move(ref)});
    };

    // Word boxes: H everywhere, rotations on primary qubits, CNOT onto
    // adjoint partners.
    int wire_base = 0;
    std::vector<int> box_primary_wire(diagram.boxes.size(), 0);
    for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
        const Box &box = diagram.boxes[b];
        const int arity = static_cast<int>(box.types.size());
        const int primary = wire_base + primary_wire_of(box);
        box_primary_wire[b] = primary;
        for (int wi = 0; wi < arity; ++wi) {
            for (int k = 0; k < w; ++k) {
                pc.gates.push_back({GateKind::H, qubit_of(wire_base + wi, k), -1, std::nullopt});
            }
        }
        for (int k = 0; k < w; ++k) {
            for (int j = 0; j < kSlotsPerQubit; ++j) {
                emit_rot(ansatz.rotation_axes[static_cast<std::size_t>(j)], qubit_of(primary, k),
                         {box.component, kSlotsPerQubit * k + j, 1.0});
            }
        }
        for (int wi = 0; wi < arity; ++wi) {
            const int wire = wire_base + wi;
            if (wire == primary) {
                continue;
            }
            for (int k = 0; k < w; ++k) {
                pc.gates.push_back(
                    {GateKind::CNOT, qubit_of(primary, k), qubit_of(wire, k), std::nullopt});
            }
        }
        wire_base += arity;
    }

    // Connectors.
    for (const auto &con : diagram.connectors) {
        switch (con.kind) {
        case Connector::Kind::MergeDot: {
            for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
                const int wire = box_primary_wire[b];
                if (wire == diagram.open_wire) {
                    continue;
                }
                for (int k = 0; k < w; ++k) {
                    const int open_q = qubit_of(diagram.open_wire, k);
                    const int word_q = qubit_of(wire, k);
                    if (ansatz.open_wire_is_control) {
                        pc.gates.push_back({GateKind::CNOT, open_q, word_q, std::nullopt});
                    } else {
                        pc.gates.push_back({GateKind::CNOT, word_q, open_q, std::nullopt});
                    }
                }
            }
            break;
        }
        case Connector::Kind::Cup: {
            // Bell effect: CNOT then H on the left wire; both wires are
            // post-selected on 0, which projects onto the maximally
            // entangled pair.
            for (int k = 0; k < w; ++k) {
                pc.gates.push_back(
                    {GateKind::CNOT, qubit_of(con.a, k), qubit_of(con.b, k), std::nullopt});
                pc.gates.push_back({GateKind::H, qubit_of(con.a, k), -1, std::nullopt});
            }
            break;
        }
        case Connector::Kind::Stair: {
            // Controlled-Rz(theta) with theta bound to the connector's
            // slot, decomposed as Rz(t/2) . CNOT . Rz(-t/2) . CNOT using
            // half-angle multipliers.
            for (int k = 0; k < w; ++k) {
                const int ctrl = qubit_of(con.a, k);
                const int tgt = qubit_of(con.b, k);
                pc.gates.push_back({GateKind::CNOT, ctrl, tgt, std::nullopt});
                emit_rot('z', tgt, {con.component, kSlotsPerQubit * k, -0.5});
                pc.gates.push_back({GateKind::CNOT, ctrl, tgt, std::nullopt});
                emit_rot('z', tgt, {con.component, kSlotsPerQubit * k, 0.5});
            }
            break;
        }
        }
    }

    // Measurement layout: open wire's qubits read the label, everything
    // else is post-selected on 0.
    for (int k = 0; k < w; ++k) {
        pc.open_wires.push_back(qubit_of(diagram.open_wire, k));
    }
    for (int q = 0; q < pc.n_qubits; ++q) {
        if (std::find(pc.open_wires.begin(), pc.open_wires.end(), q) == pc.open_wires.end()) {
            pc.post_selected.push_back(q);
        }
    }
    pc.validate();
    return pc;
}

std::vector<BoundGate> bind_gates(const ParamCircuit &circuit, const ParamStore &store) {
    std::vector<BoundGate> bound;
    bound.reserve(circuit.gates.size());
    for (const auto &g : circuit.gates) {
        double angle = 0.0;
        if (g.angle.has_value()) {
            const auto &slots = store.at(g.angle->component);
            if (g.angle->slot < 0 || static_cast<std::size_t>(g.angle->slot) >= slots.size()) {
                throw Error("bind_gates: component \"" + g.angle->component + "\" has no slot " +
                            std::to_string(g.angle->slot));
            }
            angle = g.angle->multiplier * 2.0 * std::numbers::pi *
                    slots[static_cast<std::size_t>(g.angle->slot)];
        }
        bound.push_back({g.kind, g.q0, g.q1, angle});
    }
    return bound;
}

Statevector run_circuit(const ParamCircuit &circuit, const ParamStore &store) {
    Statevector state(circuit.n_qubits);
    state.apply(bind_gates(circuit, store));
    return state;
}

} // namespace mofq
