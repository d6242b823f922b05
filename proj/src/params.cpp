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
#include "mofq/params.hpp"

#include <json.hpp>

#include "mofq/rng.hpp"

namespace mofq {

using nlohmann::json;

std::size_t ParamStore::total_slots() const {
    std::size_t n = 0;
    for (const auto &[name, slots] : values) {
        n += slots.size();
    }
    return n;
}

std::vector<double> ParamStore::flatten() const {
    std::vector<double> flat;
    flat.reserve(total_slots());
    for (const auto &[name, slots] : values) {
        flat.insert(flat.end(), slots.begin(), slots.end());
    }
    return flat;
}

void ParamStore::unflatten(const std::vector<double> &flat) {
    if (flat.size() != total_slots()) {
        throw Error("ParamStore::unflatten: size mismatch");
    }
    std::size_t i = 0;
    for (auto &[name, slots] : values) {
        for (double &v : slots) {
            v = flat[i++];
        }
    }
}

const std::vector<double> &ParamStore::at(const std::string &component) const {
    const auto it = values.find(component);
    if (it == values.end()) {
        throw Error("ParamStore: unbound component \"" + component + "\"");
    }
    return it->second;
}

ParamStore init_params(const Vocabulary &vocab, ModelKind model, int label_width,
                       std::uint64_t seed) {
    if (label_width < 1) {
        throw Error("init_params: label_width must be >= 1");
    }
    vocab.validate();

    std::vector<std::string> components = vocab.all_tokens();
    if (model == ModelKind::Sequence) {
        components.push_back(kStartComponent);
    }
    if (model == ModelKind::Stair) {
        // One connector between each adjacent pair of the three word boxes.
        components.push_back(stair_component(0));
        components.push_back(stair_component(1));
    }

    ParamStore store;
    const std::size_t slots = static_cast<std::size_t>(kSlotsPerQubit) *
                              static_cast<std::size_t>(label_width);
    for (const auto &c : components) {
        store.values.emplace(c, std::vector<double>(slots, 0.0));
    }
    // Fill in map (sorted) order so initialization is independent of the
    // insertion sequence above.
    Rng rng(mix_seed(seed, 0x1917));
    for (auto &[name, vals] : store.values) {
        for (double &v : vals) {
            v = rng.uniform01();
        }
    }
    return store;
}

namespace {

std::string axes_to_string(const AnsatzConfig &a) {
    return std::string{a.rotation_axes[0], a.rotation_axes[1], a.rotation_axes[2]};
}

AnsatzConfig ansatz_from_json(const json &j) {
    AnsatzConfig a;
    const std::string axes = j.at("rotation_axes").get<std::string>();
    if (axes.size() != 3) {
        throw Error("checkpoint: rotation_axes must have 3 characters");
    }
    a.rotation_axes = {axes[0], axes[1], axes[2]};
    a.open_wire_is_control = j.at("open_wire_is_control").get<bool>();
    a.validate();
    return a;
}

} // namespace

std::string checkpoint_to_json(const Checkpoint &ck) {
    json j;
    j["model_kind"] = to_string(ck.model);
    j["label_width"] = ck.label_width;
    j["ansatz"] = {{"rotation_axes", axes_to_string(ck.ansatz)},
                   {"open_wire_is_control", ck.ansatz.open_wire_is_control}};
    json angles = json::object();
    for (const auto &[name, slots] : ck.params.values) {
        angles[name] = slots;
    }
    j["angles"] = angles;
    return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &e) {
        throw Error(std::string("checkpoint: invalid JSON: ") + e.what());
    }
    try {
        Checkpoint ck;
        ck.model = model_kind_from_string(j.at("model_kind").get<std::string>());
        ck.label_width = j.at("label_width").get<int>();
        if (ck.label_width < 1) {
            throw Error("checkpoint: label_width must be >= 1");
        }
        ck.ansatz = ansatz_from_json(j.at("ansatz"));
        const std::size_t slots = static_cast<std::size_t>(kSlotsPerQubit) *
                                  static_cast<std::size_t>(ck.label_width);
        for (const auto &[name, vals] : j.at("angles").items()) {
            auto v = vals.get<std::vector<double>>();
            if (v.size() != slots) {
                throw Error("checkpoint: component \"" + name + "\" has " +
                            std::to_string(v.size()) + " slots, expected " +
                            std::to_string(slots));
            }
            ck.params.values.emplace(name, std::move(v));
        }
        return ck;
    } catch (const json::exception &e) {
        throw Error(std::string("checkpoint: missing or mistyped field: ") + e.what());
    }
}

void save_checkpoint(const std::string &path, const Checkpoint &ck) {
    write_text_file(path, checkpoint_to_json(ck));
}

Checkpoint load_checkpoint(const std::string &path) {
    return checkpoint_from_json(read_text_file(path));
}

} // namespace mofq
