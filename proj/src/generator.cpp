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
#include "mofq/generator.hpp"

#include <cstdio>

#include <json.hpp>

namespace mofq {

using nlohmann::json;

std::string to_string(OutcomeStatus status) {
    switch (status) {
    case OutcomeStatus::Correct:
        return "correct";
    case OutcomeStatus::Incorrect:
        return "incorrect";
    case OutcomeStatus::Timeout:
        return "timeout";
    }
    return "?";
}

MofName generate_candidate(const Vocabulary &vocab, Rng &stream) {
    vocab.validate();
    return MofName{vocab.topologies[stream.below(vocab.topologies.size())],
                   vocab.nodes[stream.below(vocab.nodes.size())],
                   vocab.edges[stream.below(vocab.edges.size())]};
}

GenerationOutcome inverse_design(int target_class, const RelativeClassifier &classifier,
                                 const std::map<std::string, int> &true_labels,
                                 const Vocabulary &vocab, double threshold, int max_iter,
                                 std::uint64_t seed) {
    if (target_class < 0 || target_class > 3) {
        throw Error("inverse_design: target class must be in 0..3");
    }
    if (threshold < 0.0 || threshold > 1.0) {
        throw Error("inverse_design: threshold must be in [0, 1]");
    }
    if (max_iter < 1) {
        throw Error("inverse_design: max_iter must be >= 1");
    }

    Rng candidates(mix_seed(seed, 0xca4dULL));
    GenerationOutcome out;
    for (int iter = 1; iter <= max_iter; ++iter) {
        const MofName candidate = generate_candidate(vocab, candidates);
        const EnsemblePrediction pred =
            classifier.predict(candidate, mix_seed(seed, 0x17e2ULL,
                                                   static_cast<std::uint64_t>(iter)));
        const std::optional<int> accepted = classify(pred, threshold);
        if (!accepted.has_value() || *accepted != target_class) {
            continue; // Keep searching — off-target acceptances don't stop the loop.
        }
        const auto it = true_labels.find(candidate.str());
        if (it == true_labels.end()) {
            throw Error("inverse_design: no ground-truth label for \"" + candidate.str() + "\"");
        }
        out.status = it->second == target_class ? OutcomeStatus::Correct
                                                : OutcomeStatus::Incorrect;
        out.guesses = iter;
        out.accepted = candidate;
        out.true_class = it->second;
        return out;
    }
    out.status = OutcomeStatus::Timeout;
    out.guesses = max_iter;
    return out;
}

GenerationReport run_benchmark(const std::vector<int> &targets, int trials,
                               const RelativeClassifier &classifier,
                               const std::map<std::string, int> &true_labels,
                               const Vocabulary &vocab, double threshold, int max_iter,
                               std::uint64_t seed) {
    if (trials < 1) {
        throw Error("run_benchmark: trials must be >= 1");
    }
    GenerationReport report;
    report.trials = trials;
    report.threshold = threshold;
    report.max_iter = max_iter;

    for (int target : targets) {
        std::vector<OutcomeStatus> status(static_cast<std::size_t>(trials));
        std::vector<int> guesses(static_cast<std::size_t>(trials));
        // Trials are seeded independently; the loop order does not affect
        // any outcome, only the fixed-order tally below does.
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) {
            const GenerationOutcome outcome =
                inverse_design(target, classifier, true_labels, vocab, threshold, max_iter,
                               mix_seed(seed, static_cast<std::uint64_t>(target),
                                        static_cast<std::uint64_t>(t)));
            status[static_cast<std::size_t>(t)] = outcome.status;
            guesses[static_cast<std::size_t>(t)] = outcome.guesses;
        }
        BenchmarkRow row;
        row.target_class = target;
        long total_guesses = 0;
        for (int t = 0; t < trials; ++t) {
            switch (status[static_cast<std::size_t>(t)]) {
            case OutcomeStatus::Correct:
                ++row.correct;
                break;
            case OutcomeStatus::Incorrect:
                ++row.incorrect;
                break;
            case OutcomeStatus::Timeout:
                ++row.timeout;
                break;
            }
            total_guesses += guesses[static_cast<std::size_t>(t)];
        }
        row.accuracy = static_cast<double>(row.correct) / static_cast<double>(trials);
        row.avg_guesses = static_cast<double>(total_guesses) / static_cast<double>(trials);
        report.rows.push_back(row);
    }
    return report;
}

std::string report_to_json(const GenerationReport &report) {
    json rows = json::array();
    for (const auto &row : report.rows) {
        rows.push_back({{"class", class_bitstring(row.target_class)},
                        {"target", class_alias(row.target_class)},
                        {"correct", row.correct},
                        {"incorrect", row.incorrect},
                        {"timeout", row.timeout},
                        {"accuracy", row.accuracy},
                        {"avg_guesses", row.avg_guesses}});
    }
    json j;
    j["trials"] = report.trials;
    j["threshold"] = report.threshold;
    j["max_iter"] = report.max_iter;
    j["classes"] = rows;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const GenerationReport &report) {
    std::string csv = "class,correct,incorrect,timeout,accuracy,avg_guesses\n";
    char line[160];
    for (const auto &row : report.rows) {
        std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%.9g,%.9g\n",
                      class_bitstring(row.target_class).c_str(), row.correct, row.incorrect,
                      row.timeout, row.accuracy, row.avg_guesses);
        csv += line;
    }
    return csv;
}

} // namespace mofq
