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
 * @file params.hpp
 * Shared parameter store and checkpoint serialization.
 *
 * Parameters are stored as values in [0, 1); a rotation binds slot value v
 * to the angle multiplier * 2*pi * v. Components (tokens plus the reserved
 * start/stair keys) share parameters across every circuit they appear in.
 */
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mofq/ansatz.hpp"
#include "mofq/diagram.hpp"

namespace mofq {

/**
 * component -> slot values. All components hold the same number of slots
 * (3 * label_width). Map ordering fixes the flat parameter-vector order
 * used by the optimizer.
 */
struct ParamStore {
    std::map<std::string, std::vector<double>> values;

    std::size_t total_slots() const;

    /// Copy all slots into one flat vector (component name order).
    std::vector<double> flatten() const;

    /// Inverse of flatten(); sizes must match.
    void unflatten(const std::vector<double> &flat);

    const std::vector<double> &at(const std::string &component) const;
};

/**
 * Seeded uniform [0, 1) initialization: 3 * label_width slots per
 * component. Components are the vocabulary tokens plus "<start>" for the
 * Sequence model and "<stair:i>" keys for the Stair model.
 */
ParamStore init_params(const Vocabulary &vocab, ModelKind model, int label_width,
                       std::uint64_t seed);

/**
 * A trained model's parameters together with everything needed to rebuild
 * its circuits.
 */
struct Checkpoint {
    ModelKind model = ModelKind::BoW;
    int label_width = 1;
    AnsatzConfig ansatz;
    ParamStore params;
};

std::string checkpoint_to_json(const Checkpoint &ck);
Checkpoint checkpoint_from_json(const std::string &text);

void save_checkpoint(const std::string &path, const Checkpoint &ck);
Checkpoint load_checkpoint(const std::string &path);

} // namespace mofq
