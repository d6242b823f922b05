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
 * @file diagram.hpp
 * String diagrams for the four sentence models.
 *
 *  - BoW: one single-wire box per token, all joined by one merge dot
 *    (Frobenius spider); the topology box carries the open wire.
 *  - DisCoCat: boxes typed by the pregroup grammar; grammatical
 *    contractions become cups and the single residual wire stays open.
 *  - Sequence: a start box plus one box per token, chained left-to-right
 *    by cups; the last box's output wire stays open.
 *  - Stair: one box per token, adjacent boxes joined by parameterized
 *    stair connectors; the last wire stays open.
 *
 * Wires are numbered globally left-to-right across boxes. Boxes with two
 * wires have one primary wire (plain type, carries the box's parameters)
 * and one adjoint wire.
 */
#include <string>
#include <vector>

#include "mofq/pregroup.hpp"
#include "mofq/vocab.hpp"

namespace mofq {

enum class ModelKind { BoW, DisCoCat, Sequence, Stair };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string &name);

/// Reserved parameter-store key of the Sequence start box.
inline constexpr const char *kStartComponent = "<start>";

/// Reserved parameter-store key of the i-th stair connector.
std::string stair_component(int i);

/**
 * One word box: the parameter-store key it draws angles from plus its
 * wire types (one entry per wire).
 */
struct Box {
    std::string component;
    std::vector<PgType> types;
};

/**
 * A wire-level join. Cup and Stair reference two global wire indices;
 * the merge dot joins every box wire onto the open wire and needs none.
 * Stair connectors carry their own parameter-store key.
 */
struct Connector {
    enum class Kind { MergeDot, Cup, Stair };
    Kind kind;
    int a = -1;
    int b = -1;
    std::string component; // Stair only
};

struct StringDiagram {
    ModelKind model = ModelKind::BoW;
    int label_width = 1;
    std::vector<Box> boxes;
    std::vector<Connector> connectors;
    int open_wire = 0; ///< Global wire index left open for the label.

    int n_wires() const;
    /// Flat concatenation of all box types, wire i at position i.
    std::vector<PgType> wire_types() const;
};

/// Pregroup types of one DisCoCat word box by grammatical role.
std::vector<PgType> discocat_box_types(Role role);

/**
 * Build the model's diagram for one parsed name. label_width is the number
 * of label qubits the open wire will compile to (1 = binary, 2 = 4-class);
 * must be >= 1.
 */
StringDiagram build_diagram(const MofName &name, ModelKind model, int label_width);

} // namespace mofq
