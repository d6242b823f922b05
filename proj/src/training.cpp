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
#include "mofq/training.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "mofq/rng.hpp"

namespace mofq {

std::uint64_t TrainConfig::resolved_shots(int label_width) const {
    if (shots != 0) {
        return shots;
    }
    return label_width > 1 ? 8192 : 2048;
}

void TrainConfig::validate() const {
    if (epochs < 0) {
        throw Error("TrainConfig: epochs must be >= 0");
    }
    if (a <= 0.0 || c <= 0.0 || A < 0.0) {
        throw Error("TrainConfig: gains a, c must be positive and A non-negative");
    }
    ansatz.validate();
}

namespace {
constexpr double kPredFloor = 1e-9;
} // namespace

double cross_entropy(const ProbVector &pred, const ProbVector &onehot) {
    if (pred.size() != onehot.size()) {
        throw Error("cross_entropy: size mismatch");
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (onehot[i] != 0.0) {
            const double p = std::min(std::max(pred[i], kPredFloor), 1.0);
            loss -= onehot[i] * std::log(p);
        }
    }
    return loss;
}

double cross_entropy(const ProbVector &pred, int label) {
    if (label < 0 || static_cast<std::size_t>(label) >= pred.size()) {
        throw Error("cross_entropy: label out of range");
    }
    const double p = std::min(std::max(pred[static_cast<std::size_t>(label)], kPredFloor), 1.0);
    return -std::log(p);
}

std::vector<CompiledExample> compile_split(const LabeledDataset &data,
                                           const std::vector<int> &indices,
                                           const Vocabulary &vocab, ModelKind model,
                                           const AnsatzConfig &ansatz) {
    std::vector<CompiledExample> out;
    out.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= data.records.size()) {
            throw Error("compile_split: record index out of range");
        }
        const MofName name = parse_mof_name(data.records[static_cast<std::size_t>(i)].name, vocab);
        CompiledExample ex;
        ex.circuit = compile_diagram(build_diagram(name, model, data.label_width()), ansatz);
        ex.label = data.labels[static_cast<std::size_t>(i)];
        ex.record_index = i;
        out.push_back(std::move(ex));
    }
    return out;
}

EvalResult evaluate(const std::vector<CompiledExample> &examples, const ParamStore &params,
                    const TrainConfig &config, int epoch) {
    if (examples.empty()) {
        throw Error("evaluate: empty split");
    }
    const std::size_t n = examples.size();
    const std::uint64_t shot_budget = config.resolved_shots(examples.front().circuit.label_width);
    std::vector<double> losses(n, 0.0);
    std::vector<unsigned char> correct(n, 0);
    std::vector<unsigned char> empty(n, 0);

    // Each example is independent and carries its own seed, so the loop
    // parallelizes without changing any result; the reductions below run
    // serially in fixed order.
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
        const auto &ex = examples[i];
        const Statevector state = run_circuit(ex.circuit, params);
        const int width = static_cast<int>(ex.circuit.open_wires.size());

        std::optional<ProbVector> pred;
        if (config.eval_mode == EvalMode::Exact) {
            pred = exact_class_probs(state, ex.circuit.post_selected);
        } else {
            const std::uint64_t shot_seed =
                mix_seed(config.seed, static_cast<std::uint64_t>(ex.record_index),
                         static_cast<std::uint64_t>(epoch));
            const ShotDistribution dist = sample_shots(state, shot_budget, shot_seed);
            const PostSelectResult kept = post_select(dist, ex.circuit.post_selected);
            pred = vectorize(kept.dist, width);
        }
        if (!pred.has_value()) {
            pred = ProbVector(std::size_t{1} << width,
                              1.0 / static_cast<double>(std::size_t{1} << width));
            empty[i] = 1;
        }
        losses[i] = cross_entropy(*pred, ex.label);
        correct[i] = argmax(*pred) == static_cast<std::size_t>(ex.label) ? 1 : 0;
    }

    EvalResult result;
    for (std::size_t i = 0; i < n; ++i) {
        result.loss += losses[i];
        result.accuracy += correct[i];
        result.empty_retention += empty[i];
    }
    result.loss /= static_cast<double>(n);
    result.accuracy /= static_cast<double>(n);
    if (!std::isfinite(result.loss)) {
        throw Error("evaluate: non-finite loss at epoch " + std::to_string(epoch));
    }
    return result;
}

std::string metrics_to_csv(const MetricsHistory &history) {
    std::string csv = "epoch,train_loss,train_acc,val_loss,val_acc\n";
    char line[160];
    for (const auto &m : history.epochs) {
        std::snprintf(line, sizeof(line), "%d,%.9g,%.9g,%.9g,%.9g\n", m.epoch, m.train_loss,
                      m.train_acc, m.val_loss, m.val_acc);
        csv += line;
    }
    return csv;
}

TrainResult train_model(const LabeledDataset &data, const SplitSet &splits,
                        const Vocabulary &vocab, const TrainConfig &config) {
    config.validate();
    if (splits.train.empty() || splits.val.empty()) {
        throw Error("train_model: train and validation splits must be non-empty");
    }

    const auto train_set =
        compile_split(data, splits.train, vocab, config.model, config.ansatz);
    const auto val_set = compile_split(data, splits.val, vocab, config.model, config.ansatz);

    ParamStore store =
        init_params(vocab, config.model, data.label_width(), mix_seed(config.seed, 0x1217ULL));

    TrainResult result;
    result.best_params = store;
    result.best_val_loss = std::numeric_limits<double>::infinity();

    std::vector<double> theta = store.flatten();
    std::vector<double> delta(theta.size(), 0.0);
    std::vector<double> probe(theta.size(), 0.0);
    ParamStore scratch = store;

    for (int k = 0; k < config.epochs; ++k) {
        const double ak = config.a / std::pow(config.A + k + 1.0, config.alpha);
        const double ck = config.c / std::pow(k + 1.0, config.gamma);

        Rng perturb(mix_seed(config.seed, 0x5b5aULL, static_cast<std::uint64_t>(k)));
        for (double &d : delta) {
            d = perturb.pm1();
        }

        for (std::size_t i = 0; i < theta.size(); ++i) {
            probe[i] = theta[i] + ck * delta[i];
        }
        scratch.unflatten(probe);
        const double loss_plus = evaluate(train_set, scratch, config, k).loss;

        for (std::size_t i = 0; i < theta.size(); ++i) {
            probe[i] = theta[i] - ck * delta[i];
        }
        scratch.unflatten(probe);
        const double loss_minus = evaluate(train_set, scratch, config, k).loss;

        const double diff = loss_plus - loss_minus;
        if (!std::isfinite(diff)) {
            throw Error("train_model: non-finite SPSA probe at epoch " + std::to_string(k + 1));
        }
        for (std::size_t i = 0; i < theta.size(); ++i) {
            // g_i = diff / (2 c_k delta_i); delta_i is +/-1 so dividing is
            // multiplying.
            const double step = theta[i] - ak * diff * delta[i] / (2.0 * ck);
            theta[i] = step - std::floor(step); // Wrap into [0, 1).
        }
        store.unflatten(theta);

        const EvalResult train_m = evaluate(train_set, store, config, k);
        const EvalResult val_m = evaluate(val_set, store, config, k);
        result.history.epochs.push_back(
            {k + 1, train_m.loss, train_m.accuracy, val_m.loss, val_m.accuracy});

        if (val_m.loss < result.best_val_loss) {
            result.best_val_loss = val_m.loss;
            result.best_epoch = k + 1;
            result.best_params = store;
        }
    }
    result.final_params = store;
    return result;
}

std::vector<double> spsa_minimize(const std::function<double(const std::vector<double> &)> &loss,
                                  std::vector<double> theta0, const SpsaOptions &options) {
    std::vector<double> theta = std::move(theta0);
    std::vector<double> delta(theta.size(), 0.0);
    std::vector<double> probe(theta.size(), 0.0);
    for (int k = 0; k < options.iterations; ++k) {
        const double ak = options.a / std::pow(options.A + k + 1.0, options.alpha);
        const double ck = options.c / std::pow(k + 1.0, options.gamma);
        Rng perturb(mix_seed(options.seed, 0x5b5aULL, static_cast<std::uint64_t>(k)));
        for (double &d : delta) {
            d = perturb.pm1();
        }
        for (std::size_t i = 0; i < theta.size(); ++i) {
            probe[i] = theta[i] + ck * delta[i];
        }
        const double loss_plus = loss(probe);
        for (std::size_t i = 0; i < theta.size(); ++i) {
            probe[i] = theta[i] - ck * delta[i];
        }
        const double loss_minus = loss(probe);
        const double diff = loss_plus - loss_minus;
        if (!std::isfinite(diff)) {
            throw Error("spsa_minimize: non-finite loss at iteration " + std::to_string(k));
        }
        for (std::size_t i = 0; i < theta.size(); ++i) {
            theta[i] -= ak * diff * delta[i] / (2.0 * ck);
        }
    }
    return theta;
}

} // namespace mofq
