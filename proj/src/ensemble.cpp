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
#include "mofq/ensemble.hpp"

#include <json.hpp>

#include "mofq/rng.hpp"

namespace mofq {

using nlohmann::json;

std::string class_bitstring(int cls) {
    if (cls < 0 || cls > 3) {
        throw Error("class_bitstring: class must be in 0..3");
    }
    return std::string{cls & 2 ? '1' : '0', cls & 1 ? '1' : '0'};
}

std::string class_alias(int cls) {
    switch (cls) {
    case 0:
        return "low";
    case 1:
        return "mod-low";
    case 2:
        return "mod-high";
    case 3:
        return "high";
    default:
        throw Error("class_alias: class must be in 0..3");
    }
}

int class_from_string(const std::string &text) {
    for (int c = 0; c < 4; ++c) {
        if (text == class_bitstring(c) || text == class_alias(c) ||
            text == std::to_string(c)) {
            return c;
        }
    }
    throw Error("unknown class \"" + text + "\" (expected 00|01|10|11 or low|mod-low|mod-high|high)");
}

Ensemble train_ensemble(const LabeledDataset &quaternary, const SplitSet &splits,
                        const Vocabulary &vocab, const EnsembleConfig &config) {
    if (quaternary.mode != LabelMode::Quaternary) {
        throw Error("train_ensemble: expects a quaternary-labeled dataset");
    }
    if (config.threshold < 0.0 || config.threshold > 1.0) {
        throw Error("train_ensemble: threshold must be in [0, 1]");
    }

    Ensemble ensemble;
    ensemble.property = quaternary.property;
    ensemble.threshold = config.threshold;
    // Members are one-qubit-label binary models, so an auto shot budget
    // resolves against width 1; the stored value must be concrete because
    // prediction reuses it.
    ensemble.shots = config.train.resolved_shots(1);
    ensemble.ansatz = config.train.ansatz;

    for (int k = 0; k < 4; ++k) {
        // Relabel against class k on the shared splits: 0 = target, 1 = rest.
        LabeledDataset ovr;
        ovr.records = quaternary.records;
        ovr.property = quaternary.property;
        ovr.mode = LabelMode::OneVsRest;
        ovr.ovr_target = k;
        ovr.boundaries = quaternary.boundaries;
        ovr.quaternary = quaternary.labels;
        ovr.labels.reserve(quaternary.labels.size());
        for (int q : quaternary.labels) {
            ovr.labels.push_back(q == k ? 0 : 1);
        }

        TrainConfig tc = config.train;
        tc.seed = mix_seed(config.train.seed, 0xe5bULL, static_cast<std::uint64_t>(k));
        const TrainResult trained = train_model(ovr, splits, vocab, tc);
        ensemble.models[static_cast<std::size_t>(k)] = trained.best_params;
    }
    return ensemble;
}

ProbVector relative_from_pzero(const std::array<double, 4> &p_zero, bool *all_zero) {
    double sum = 0.0;
    for (double p : p_zero) {
        if (p < 0.0) {
            throw Error("relative_from_pzero: negative probability");
        }
        sum += p;
    }
    if (all_zero != nullptr) {
        *all_zero = sum <= 0.0;
    }
    if (sum <= 0.0) {
        return ProbVector(4, 0.25);
    }
    ProbVector rel(4, 0.0);
    for (std::size_t k = 0; k < 4; ++k) {
        rel[k] = p_zero[k] / sum;
    }
    return rel;
}

EnsemblePrediction predict_relative(const Ensemble &ensemble, const MofName &name,
                                    std::uint64_t shots, std::uint64_t seed, EvalMode mode) {
    const ParamCircuit circuit =
        compile_diagram(build_diagram(name, ModelKind::BoW, 1), ensemble.ansatz);

    EnsemblePrediction out;
    for (int k = 0; k < 4; ++k) {
        const ParamStore &params = ensemble.models[static_cast<std::size_t>(k)];
        const Statevector state = run_circuit(circuit, params);
        std::optional<ProbVector> pred;
        if (mode == EvalMode::Exact) {
            pred = exact_class_probs(state, circuit.post_selected);
        } else {
            const ShotDistribution dist = sample_shots(
                state, shots, mix_seed(seed, 0xbe7ULL, static_cast<std::uint64_t>(k)));
            const PostSelectResult kept = post_select(dist, circuit.post_selected);
            pred = vectorize(kept.dist, 1);
        }
        if (!pred.has_value()) {
            pred = ProbVector{0.5, 0.5};
            ++out.empty_retention_models;
        }
        out.p_zero[static_cast<std::size_t>(k)] = (*pred)[0];
    }
    out.relative = relative_from_pzero(out.p_zero, &out.all_zero_fallback);
    return out;
}

std::optional<int> classify(const EnsemblePrediction &prediction, double threshold) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw Error("classify: threshold must be in [0, 1]");
    }
    const std::size_t best = argmax(prediction.relative);
    if (prediction.relative[best] >= threshold) {
        return static_cast<int>(best);
    }
    return std::nullopt;
}

std::string ensemble_to_json(const Ensemble &ensemble) {
    json models = json::object();
    for (int k = 0; k < 4; ++k) {
        json angles = json::object();
        for (const auto &[name, slots] : ensemble.models[static_cast<std::size_t>(k)].values) {
            angles[name] = slots;
        }
        models[class_bitstring(k)] = {{"angles", angles}};
    }
    json j;
    j["kind"] = "one_vs_rest_ensemble";
    j["property"] = to_string(ensemble.property);
    j["threshold"] = ensemble.threshold;
    j["shots"] = ensemble.shots;
    j["ansatz"] = {{"rotation_axes", std::string{ensemble.ansatz.rotation_axes[0],
                                                 ensemble.ansatz.rotation_axes[1],
                                                 ensemble.ansatz.rotation_axes[2]}},
                   {"open_wire_is_control", ensemble.ansatz.open_wire_is_control}};
    j["models"] = models;
    return j.dump(2) + "\n";
}

Ensemble ensemble_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &e) {
        throw Error(std::string("ensemble: invalid JSON: ") + e.what());
    }
    try {
        Ensemble e;
        e.property = property_from_string(j.at("property").get<std::string>());
        e.threshold = j.at("threshold").get<double>();
        if (e.threshold < 0.0 || e.threshold > 1.0) {
            throw Error("ensemble: threshold must be in [0, 1]");
        }
        e.shots = j.at("shots").get<std::uint64_t>();
        const auto &a = j.at("ansatz");
        const std::string axes = a.at("rotation_axes").get<std::string>();
        if (axes.size() != 3) {
            throw Error("ensemble: rotation_axes must have 3 characters");
        }
        e.ansatz.rotation_axes = {axes[0], axes[1], axes[2]};
        e.ansatz.open_wire_is_control = a.at("open_wire_is_control").get<bool>();
        e.ansatz.validate();
        for (int k = 0; k < 4; ++k) {
            const auto &m = j.at("models").at(class_bitstring(k));
            for (const auto &[name, vals] : m.at("angles").items()) {
                e.models[static_cast<std::size_t>(k)].values.emplace(
                    name, vals.get<std::vector<double>>());
            }
        }
        return e;
    } catch (const json::exception &ex) {
        throw Error(std::string("ensemble: missing or mistyped field: ") + ex.what());
    }
}

void save_ensemble(const std::string &path, const Ensemble &ensemble) {
    write_text_file(path, ensemble_to_json(ensemble));
}

Ensemble load_ensemble(const std::string &path) {
    return ensemble_from_json(read_text_file(path));
}

} // namespace mofq
