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
#include "mofq/diagram.hpp"

namespace mofq {

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::BoW:
        return "bow";
    case ModelKind::DisCoCat:
        return "discocat";
    case ModelKind::Sequence:
        return "sequence";
    case ModelKind::Stair:
        return "stair";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string &name) {
    if (name == "bow") {
        return ModelKind::BoW;
    }
    if (name == "discocat") {
        return ModelKind::DisCoCat;
    }
    if (name == "sequence") {
        return ModelKind::Sequence;
    }
    if (name == "stair") {
        return ModelKind::Stair;
    }
    throw Error("unknown model kind \"" + name + "\" (expected bow|discocat|sequence|stair)");
}

std::string stair_component(int i) { return "<stair:" + std::to_string(i) + ">"; }

int StringDiagram::n_wires() const {
    int n = 0;
    for (const auto &box : boxes) {
        n += static_cast<int>(box.types.size());
    }
    return n;
}

std::vector<PgType> StringDiagram::wire_types() const {
    std::vector<PgType> out;
    for (const auto &box : boxes) {
        out.insert(out.end(), box.types.begin(), box.types.end());
    }
    return out;
}

std::vector<PgType> discocat_box_types(Role role) {
    // Role-tagged atoms: the topology emits the sentence type n and asks
    // for a node (t), the node asks for an edge (e), the edge closes the
    // sentence. Any out-of-order token sequence then leaves a residual
    // different from [n].
    switch (role) {
    case Role::Topology:
        return {plain("n"), left_adj("t")};
    case Role::Node:
        return {plain("t"), left_adj("e")};
    case Role::Edge:
        return {plain("e")};
    }
    throw Error("discocat_box_types: bad role");
}

StringDiagram build_diagram(const MofName &name, ModelKind model, int label_width) {
    if (label_width < 1) {
        throw Error("build_diagram: label_width must be >= 1");
    }
    StringDiagram d;
    d.model = model;
    d.label_width = label_width;
    const std::string tokens[3] = {name.topology, name.node, name.edge};

    switch (model) {
    case ModelKind::BoW: {
        for (const auto &tok : tokens) {
            d.boxes.push_back({tok, {plain("n")}});
        }
        d.connectors.push_back({Connector::Kind::MergeDot, -1, -1, ""});
        d.open_wire = 0; // Topology box delivers the label.
        break;
    }
    case ModelKind::DisCoCat: {
        constexpr Role roles[3] = {Role::Topology, Role::Node, Role::Edge};
        for (int i = 0; i < 3; ++i) {
            d.boxes.push_back({tokens[i], discocat_box_types(roles[i])});
        }
        const Reduction red = reduce_with_links(d.wire_types());
        if (red.residual.size() != 1 || red.residual[0].adj != 0) {
            throw Error("build_diagram: sentence does not reduce to a single plain type, "
                        "residual " +
                        to_string(red.residual));
        }
        for (const auto &[a, b] : red.cups) {
            d.connectors.push_back({Connector::Kind::Cup, a, b, ""});
        }
        // The one uncontracted wire is the open wire.
        std::vector<bool> closed(static_cast<std::size_t>(d.n_wires()), false);
        for (const auto &[a, b] : red.cups) {
            closed[static_cast<std::size_t>(a)] = true;
            closed[static_cast<std::size_t>(b)] = true;
        }
        for (int w = 0; w < d.n_wires(); ++w) {
            if (!closed[static_cast<std::size_t>(w)]) {
                d.open_wire = w;
                break;
            }
        }
        break;
    }
    case ModelKind::Sequence: {
        d.boxes.push_back({kStartComponent, {plain("s")}});
        for (const auto &tok : tokens) {
            d.boxes.push_back({tok, {right_adj("s"), plain("s")}});
        }
        // [s, s^r.s, s^r.s, s^r.s] contracts pairwise left-to-right.
        const Reduction red = reduce_with_links(d.wire_types());
        if (red.residual.size() != 1) {
            throw Error("build_diagram: sequence reduction failed");
        }
        for (const auto &[a, b] : red.cups) {
            d.connectors.push_back({Connector::Kind::Cup, a, b, ""});
        }
        d.open_wire = d.n_wires() - 1; // Last word's output.
        break;
    }
    case ModelKind::Stair: {
        for (const auto &tok : tokens) {
            d.boxes.push_back({tok, {plain("n")}});
        }
        for (int i = 0; i + 1 < 3; ++i) {
            d.connectors.push_back({Connector::Kind::Stair, i, i + 1, stair_component(i)});
        }
        d.open_wire = 2; // Last word carries the accumulated context.
        break;
    }
    }
    return d;
}

} // namespace mofq
