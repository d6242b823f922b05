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
 * @file ensemble.hpp
 * One-vs-rest ensemble of four binary classifiers.
 *
 * Model k is a binary BoW classifier trained to answer "is this framework
 * in property class k?" (label 0 = yes). A framework's relative
 * probability over the four classes normalizes the four zero-state
 * probabilities: relative_k = p_zero[k] / sum(p_zero). A class is
 * accepted when its relative probability reaches the decision threshold.
 */
#include <array>
#include <cstdint>
#include <optional>

#include "mofq/training.hpp"

namespace mofq {

struct Ensemble {
    Property property = Property::PoreVolume;
    double threshold = 0.85;
    std::uint64_t shots = 2048;
    AnsatzConfig ansatz;
    std::array<ParamStore, 4> models; ///< Indexed by quaternary class.
};

struct EnsembleConfig {
    Property property = Property::PoreVolume;
    double threshold = 0.85;
    TrainConfig train; ///< model/shots defaults are the binary BoW settings.
};

/**
 * Train the four one-vs-rest models on a quaternary-labeled dataset.
 * All four reuse the given splits (relabeled after splitting, so the
 * example partition is identical across models) and derive their seeds
 * from the config seed.
 */
Ensemble train_ensemble(const LabeledDataset &quaternary, const SplitSet &splits,
                        const Vocabulary &vocab, const EnsembleConfig &config);

struct EnsemblePrediction {
    std::array<double, 4> p_zero{}; ///< Per-model zero-state probability.
    ProbVector relative;            ///< Normalized over the four classes.
    int empty_retention_models = 0;
    bool all_zero_fallback = false; ///< True when sum(p_zero) vanished.
};

/**
 * Normalize four zero-state probabilities into a relative distribution.
 * An all-zero input falls back to uniform and reports it via the flag.
 */
ProbVector relative_from_pzero(const std::array<double, 4> &p_zero, bool *all_zero = nullptr);

/**
 * Evaluate all four models on one framework. Per-model sampling seeds
 * derive from (seed, model index); empty retention falls back to the
 * uniform binary vector (p_zero = 0.5) and is counted.
 */
EnsemblePrediction predict_relative(const Ensemble &ensemble, const MofName &name,
                                    std::uint64_t shots, std::uint64_t seed,
                                    EvalMode mode = EvalMode::Shots);

/**
 * Accepted class: argmax of the relative distribution (ties toward the
 * lower class) when it reaches the threshold, nullopt otherwise. The
 * threshold must lie in [0, 1].
 */
std::optional<int> classify(const EnsemblePrediction &prediction, double threshold);

std::string ensemble_to_json(const Ensemble &ensemble);
Ensemble ensemble_from_json(const std::string &text);
void save_ensemble(const std::string &path, const Ensemble &ensemble);
Ensemble load_ensemble(const std::string &path);

/// "00", "01", "10", "11" for classes 0..3.
std::string class_bitstring(int cls);

/// Human-readable class aliases: low, mod-low, mod-high, high.
std::string class_alias(int cls);
int class_from_string(const std::string &text);

} // namespace mofq
