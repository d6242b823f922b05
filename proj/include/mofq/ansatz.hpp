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
 * @file ansatz.hpp
 * Word-box ansatz knobs.
 */
#include <array>

#include "mofq/common.hpp"

namespace mofq {

/**
 * Shape of the per-qubit word ansatz and of the merge dot.
 *
 * Every primary qubit gets H followed by three rotations whose axes are
 * given by rotation_axes (x-z-x by default — an Euler-style sequence that
 * can reach any single-qubit state). open_wire_is_control picks the CNOT
 * orientation of the BoW merge dot: with the open wire as control and the
 * component qubits as post-selected targets, the retained open-wire
 * amplitude is the product of the word amplitudes, which is the behaviour
 * the classifier is built on. The reverse orientation is kept selectable
 * for experiments.
 */
struct AnsatzConfig {
    std::array<char, 3> rotation_axes{'x', 'z', 'x'};
    bool open_wire_is_control = true;

    void validate() const {
        for (char ax : rotation_axes) {
            if (ax != 'x' && ax != 'z') {
                throw Error("AnsatzConfig: rotation axis must be 'x' or 'z'");
            }
        }
    }

    bool operator==(const AnsatzConfig &) const = default;
};

/// Rotation slots per component qubit (one per rotation in the ansatz).
inline constexpr int kSlotsPerQubit = 3;

} // namespace mofq
