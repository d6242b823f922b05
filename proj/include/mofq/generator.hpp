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
 * @file generator.hpp
 * Inverse design: propose frameworks until the classifier accepts one
 * for the requested property class.
 *
 * The proposal loop draws uniform random (topology, node, edge)
 * combinations and asks a relative classifier for each; the first
 * candidate whose accepted class equals the target ends the search. The
 * benchmark scores accepted candidates against ground-truth labels:
 * correct / incorrect by true class, timeout when the iteration budget
 * runs out.
 */
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mofq/ensemble.hpp"
#include "mofq/rng.hpp"

namespace mofq {

/**
 * Anything that can produce a relative class distribution for a
 * framework. The production implementation wraps a trained ensemble;
 * tests inject synthetic classifiers.
 */
class RelativeClassifier {
  public:
    virtual ~RelativeClassifier() = default;
    virtual EnsemblePrediction predict(const MofName &name, std::uint64_t seed) const = 0;
};

/// Shot-sampled (or exact) predictions from a trained ensemble.
class EnsembleClassifier final : public RelativeClassifier {
  public:
    EnsembleClassifier(const Ensemble &ensemble, EvalMode mode = EvalMode::Shots)
        : ensemble_(ensemble), mode_(mode) {}

    EnsemblePrediction predict(const MofName &name, std::uint64_t seed) const override {
        return predict_relative(ensemble_, name, ensemble_.shots, seed, mode_);
    }

  private:
    const Ensemble &ensemble_;
    EvalMode mode_;
};

/// Uniform random framework: each role token drawn independently.
MofName generate_candidate(const Vocabulary &vocab, Rng &stream);

enum class OutcomeStatus { Correct, Incorrect, Timeout };

std::string to_string(OutcomeStatus status);

struct GenerationOutcome {
    OutcomeStatus status = OutcomeStatus::Timeout;
    int guesses = 0; ///< Candidates generated (max_iter on timeout).
    std::optional<MofName> accepted;
    int true_class = -1; ///< Ground-truth class of the accepted candidate.
};

/**
 * Search for a framework of `target_class`. Every candidate gets one
 * classifier call; a candidate accepted into a different class does not
 * stop the search. Accepted candidates are scored against `true_labels`
 * (name -> quaternary class; every vocabulary combination must appear).
 * max_iter must be >= 1, threshold in [0, 1].
 */
GenerationOutcome inverse_design(int target_class, const RelativeClassifier &classifier,
                                 const std::map<std::string, int> &true_labels,
                                 const Vocabulary &vocab, double threshold, int max_iter,
                                 std::uint64_t seed);

struct BenchmarkRow {
    int target_class = 0;
    int correct = 0;
    int incorrect = 0;
    int timeout = 0;
    double accuracy = 0.0;    ///< correct / trials.
    double avg_guesses = 0.0; ///< Mean candidates per trial, timeouts included.
};

struct GenerationReport {
    int trials = 0;
    double threshold = 0.85;
    int max_iter = 100;
    std::vector<BenchmarkRow> rows;
};

/**
 * Repeat inverse design `trials` times per target class. Trials are
 * independent (seed mixes in target and trial index), so rows are
 * reproducible and the loop parallelizes without changing counts.
 */
GenerationReport run_benchmark(const std::vector<int> &targets, int trials,
                               const RelativeClassifier &classifier,
                               const std::map<std::string, int> &true_labels,
                               const Vocabulary &vocab, double threshold, int max_iter,
                               std::uint64_t seed);

std::string report_to_json(const GenerationReport &report);
std::string report_to_csv(const GenerationReport &report);

} // namespace mofq
