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
#include "mofq/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "mofq/dataset.hpp"
#include "mofq/ensemble.hpp"
#include "mofq/generator.hpp"
#include "mofq/training.hpp"

namespace mofq::cli {

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("MOFQNLP_SEED")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const std::uint64_t seed = std::stoull(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return seed;
        } catch (const std::exception &) {
            throw Error("MOFQNLP_SEED must be an unsigned integer, got \"" + std::string(env) +
                        "\"");
        }
    }
    return 42;
}

/// "out/report.json" -> "out/report.meta.json"
std::string meta_path(const std::string &out_path) {
    std::filesystem::path p(out_path);
    p.replace_extension();
    return p.string() + ".meta.json";
}

void write_metadata(const std::string &out_path, const std::string &command,
                    std::uint64_t seed, const json &config) {
    json meta;
    meta["command"] = command;
    meta["version"] = kVersion;
    meta["seed"] = seed;
    meta["config"] = config;
    write_text_file(meta_path(out_path), meta.dump(2) + "\n");
}

/// Config-file keys mapped to setters writing the bound option variables.
using ConfigSetters = std::map<std::string, std::function<void(const json &)>>;

template <typename T>
std::pair<const std::string, std::function<void(const json &)>> cfg(const std::string &key,
                                                                    T &ref) {
    return {key, [&ref](const json &v) { ref = v.get<T>(); }};
}

/**
 * Apply --config JSON values for options that were not passed explicitly
 * on the command line (flags override file values). Unknown keys are
 * rejected.
 */
void apply_config_file(CLI::App *cmd, const ConfigSetters &setters, const std::string &path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const Error &) {
        throw;
    } catch (const std::exception &e) {
        throw Error("config file " + path + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw Error("config file " + path + ": expected a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "config") {
            throw Error("config file " + path + ": config files cannot nest");
        }
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw Error("config file " + path + ": unknown key \"" + key + "\"");
        }
        if (cmd->count("--" + key) > 0) {
            continue; // Explicit flag wins.
        }
        try {
            it->second(value);
        } catch (const std::exception &) {
            throw Error("config file " + path + ": bad value for key \"" + key + "\"");
        }
    }
}

LabelMode task_to_mode(const std::string &task) {
    if (task == "binary") {
        return LabelMode::Binary;
    }
    if (task == "multi") {
        return LabelMode::Quaternary;
    }
    if (task == "ovr") {
        return LabelMode::OneVsRest;
    }
    throw Error("unknown task \"" + task + "\" (expected binary|multi|ovr)");
}

// Options shared by every training-style command.
struct TrainFlags {
    std::string dataset_path = "mofs.json";
    std::string property = "pv";
    int epochs = 120;
    std::uint64_t shots = 0;
    std::uint64_t seed = 42;
    double a = 0.05;
    double c = 0.06;
    double A = 2.0;
    double alpha = 0.602;
    double gamma = 0.101;
    bool exact = false;
    std::string boundary = "median";
    double boundary_value = 0.0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--dataset", dataset_path, "Dataset JSON path");
        cmd->add_option("--property", property, "Target property: pv|h2");
        cmd->add_option("--epochs", epochs, "Training epochs");
        cmd->add_option("--shots", shots,
                        "Shots per circuit evaluation (0 = auto: 2048 binary, 8192 four-class)");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--a", a, "SPSA step gain a");
        cmd->add_option("--c", c, "SPSA perturbation gain c");
        cmd->add_option("--A", A, "SPSA stability constant A");
        cmd->add_option("--alpha", alpha, "SPSA step exponent");
        cmd->add_option("--gamma", gamma, "SPSA perturbation exponent");
        cmd->add_flag("--exact", exact, "Exact probabilities instead of shot sampling");
        cmd->add_option("--boundary", boundary,
                        "Binary boundary policy: median|fixed (see --boundary-value)");
        cmd->add_option("--boundary-value", boundary_value,
                        "Absolute boundary for --boundary fixed");
    }

    ConfigSetters config_setters() {
        return {cfg("dataset", dataset_path), cfg("property", property),
                cfg("epochs", epochs),        cfg("shots", shots),
                cfg("seed", seed),            cfg("a", a),
                cfg("c", c),                  cfg("A", A),
                cfg("alpha", alpha),          cfg("gamma", gamma),
                cfg("exact", exact),          cfg("boundary", boundary),
                cfg("boundary-value", boundary_value)};
    }

    TrainConfig train_config() const {
        TrainConfig tc;
        tc.shots = shots;
        tc.epochs = epochs;
        tc.a = a;
        tc.c = c;
        tc.A = A;
        tc.alpha = alpha;
        tc.gamma = gamma;
        tc.seed = seed;
        tc.eval_mode = exact ? EvalMode::Exact : EvalMode::Shots;
        return tc;
    }

    LabelOptions label_options() const {
        LabelOptions lo;
        if (boundary == "median") {
            lo.policy = BoundaryPolicy::Median;
        } else if (boundary == "fixed") {
            lo.policy = BoundaryPolicy::Fixed;
            lo.fixed_boundary = boundary_value;
        } else {
            throw Error("unknown boundary policy \"" + boundary + "\" (expected median|fixed)");
        }
        return lo;
    }

    json to_json() const {
        return {{"dataset", dataset_path}, {"property", property}, {"epochs", epochs},
                {"shots", shots},          {"seed", seed},         {"a", a},
                {"c", c},                  {"A", A},               {"alpha", alpha},
                {"gamma", gamma},          {"exact", exact},       {"boundary", boundary},
                {"boundary-value", boundary_value}};
    }
};

int run_dataset_gen(std::uint64_t seed, const std::string &out,
                    const std::string &anchors_path) {
    std::vector<PropertyRecord> anchors = default_anchors();
    if (!anchors_path.empty()) {
        anchors = load_dataset(anchors_path);
    }
    const auto records = synthesize_properties(default_vocabulary(), seed, anchors);
    save_dataset(out, records);
    write_metadata(out, "dataset gen", seed,
                   {{"out", out}, {"anchors", anchors_path.empty() ? "builtin" : anchors_path}});
    std::cout << "wrote " << records.size() << " frameworks to " << out << "\n";
    return 0;
}

int run_dataset_stats(const std::string &dataset_path, const std::string &property,
                      const std::string &mode, int threshold, const std::string &out) {
    const auto records = load_dataset(dataset_path);
    const Property prop = property_from_string(property);
    const LabelMode label_mode = label_mode_from_string(mode);
    const LabeledDataset labeled = assign_labels(records, prop, label_mode);
    const SignificanceTable table =
        class_significance(labeled, default_vocabulary(), threshold);

    json j = json::parse(significance_to_json(table, labeled));
    const auto &v = default_vocabulary();
    j["combination_count"] =
        compute_ucic({static_cast<double>(v.topologies.size()),
                      static_cast<double>(v.nodes.size()), static_cast<double>(v.edges.size())});
    write_text_file(out, j.dump(2) + "\n");
    write_metadata(out, "dataset stats", 0,
                   {{"dataset", dataset_path},
                    {"property", property},
                    {"mode", mode},
                    {"threshold", threshold},
                    {"out", out}});
    std::cout << "wrote class statistics to " << out << "\n";
    return 0;
}

int run_train(const TrainFlags &flags, const std::string &task, int ovr_target,
              const std::string &model, const std::string &out_checkpoint,
              const std::string &out_metrics) {
    const auto records = load_dataset(flags.dataset_path);
    LabelOptions lo = flags.label_options();
    lo.ovr_target = ovr_target;
    const LabeledDataset labeled =
        assign_labels(records, property_from_string(flags.property), task_to_mode(task), lo);
    const SplitSet splits = split_dataset(labeled, flags.seed);

    TrainConfig tc = flags.train_config();
    tc.model = model_kind_from_string(model);

    const TrainResult result = train_model(labeled, splits, default_vocabulary(), tc);

    Checkpoint ck;
    ck.model = tc.model;
    ck.label_width = labeled.label_width();
    ck.ansatz = tc.ansatz;
    ck.params = result.best_params;
    save_checkpoint(out_checkpoint, ck);
    write_text_file(out_metrics, metrics_to_csv(result.history));
    {
        std::filesystem::path p(out_checkpoint);
        p.replace_extension();
        write_text_file(p.string() + ".labels.json", labels_to_json(labeled, splits));
    }

    json config = flags.to_json();
    config["task"] = task;
    config["ovr-target"] = ovr_target;
    config["model"] = model;
    config["out-checkpoint"] = out_checkpoint;
    config["out-metrics"] = out_metrics;
    write_metadata(out_checkpoint, "train", flags.seed, config);

    const auto &best = result.history.epochs.empty()
                           ? EpochMetrics{}
                           : result.history.epochs[static_cast<std::size_t>(
                                 result.best_epoch - 1)];
    std::printf("model %s: best epoch %d, val_loss %.4f, val_acc %.4f\n", model.c_str(),
                result.best_epoch, best.val_loss, best.val_acc);
    return 0;
}

int run_compare(const TrainFlags &flags, const std::string &task, const std::string &out) {
    const auto records = load_dataset(flags.dataset_path);
    const LabeledDataset labeled = assign_labels(
        records, property_from_string(flags.property), task_to_mode(task), flags.label_options());
    const SplitSet splits = split_dataset(labeled, flags.seed);

    std::string csv = "model,best_epoch,train_loss,train_acc,val_loss,val_acc\n";
    for (const ModelKind kind :
         {ModelKind::BoW, ModelKind::DisCoCat, ModelKind::Sequence, ModelKind::Stair}) {
        TrainConfig tc = flags.train_config();
        tc.model = kind;
        const TrainResult result = train_model(labeled, splits, default_vocabulary(), tc);
        const EpochMetrics best =
            result.history.epochs.empty()
                ? EpochMetrics{}
                : result.history.epochs[static_cast<std::size_t>(result.best_epoch - 1)];
        char line[200];
        std::snprintf(line, sizeof(line), "%s,%d,%.9g,%.9g,%.9g,%.9g\n",
                      to_string(kind).c_str(), result.best_epoch, best.train_loss, best.train_acc,
                      best.val_loss, best.val_acc);
        csv += line;
        std::printf("%-9s best epoch %3d  val_loss %.4f  val_acc %.4f\n",
                    to_string(kind).c_str(), result.best_epoch, best.val_loss, best.val_acc);
    }
    write_text_file(out, csv);

    json config = flags.to_json();
    config["task"] = task;
    config["out"] = out;
    write_metadata(out, "compare", flags.seed, config);
    return 0;
}

int run_ensemble_train(const TrainFlags &flags, double threshold, const std::string &out) {
    const auto records = load_dataset(flags.dataset_path);
    const LabeledDataset labeled =
        assign_labels(records, property_from_string(flags.property), LabelMode::Quaternary);
    const SplitSet splits = split_dataset(labeled, flags.seed);

    EnsembleConfig ec;
    ec.property = labeled.property;
    ec.threshold = threshold;
    ec.train = flags.train_config();
    ec.train.model = ModelKind::BoW;

    const Ensemble ensemble = train_ensemble(labeled, splits, default_vocabulary(), ec);
    save_ensemble(out, ensemble);

    json config = flags.to_json();
    config["threshold"] = threshold;
    config["out"] = out;
    write_metadata(out, "ensemble-train", flags.seed, config);
    std::cout << "wrote one-vs-rest ensemble to " << out << "\n";
    return 0;
}

int run_generate(const std::string &ensemble_path, const std::string &dataset_path,
                 const std::string &target, int trials, double threshold_override, int max_iter,
                 std::uint64_t seed, bool exact, const std::string &out) {
    const Ensemble ensemble = load_ensemble(ensemble_path);
    const auto records = load_dataset(dataset_path);
    const LabeledDataset labeled =
        assign_labels(records, ensemble.property, LabelMode::Quaternary);

    std::map<std::string, int> true_labels;
    for (std::size_t i = 0; i < labeled.records.size(); ++i) {
        true_labels[labeled.records[i].name] = labeled.labels[i];
    }

    std::vector<int> targets;
    if (target == "all") {
        targets = {0, 1, 2, 3};
    } else {
        targets = {class_from_string(target)};
    }
    const double threshold = threshold_override >= 0.0 ? threshold_override : ensemble.threshold;

    const EnsembleClassifier classifier(ensemble,
                                        exact ? EvalMode::Exact : EvalMode::Shots);
    const GenerationReport report =
        run_benchmark(targets, trials, classifier, true_labels, default_vocabulary(), threshold,
                      max_iter, seed);

    write_text_file(out, report_to_json(report));
    {
        std::filesystem::path p(out);
        p.replace_extension();
        write_text_file(p.string() + ".csv", report_to_csv(report));
    }
    write_metadata(out, "generate", seed,
                   {{"ensemble", ensemble_path},
                    {"dataset", dataset_path},
                    {"target", target},
                    {"trials", trials},
                    {"threshold", threshold},
                    {"max-iter", max_iter},
                    {"exact", exact},
                    {"out", out}});

    std::printf("%-8s %8s %9s %7s %9s %11s\n", "class", "correct", "incorrect", "timeout",
                "accuracy", "avg_guesses");
    for (const auto &row : report.rows) {
        std::printf("%-8s %8d %9d %7d %9.3f %11.2f\n", class_alias(row.target_class).c_str(),
                    row.correct, row.incorrect, row.timeout, row.accuracy, row.avg_guesses);
    }
    return 0;
}

/// Builds the command tree, parses, applies any config file, dispatches.
/// Throws Error for domain failures; the public run() turns those into
/// exit codes.
int run_impl(const std::vector<std::string> &args) {
    CLI::App app{"Quantum language-model toolkit for reticular framework design"};
    app.require_subcommand(1);

    std::string config_path;

    // dataset gen / dataset stats
    auto *dataset_cmd = app.add_subcommand("dataset", "Dataset generation and statistics");
    dataset_cmd->require_subcommand(1);

    auto *gen = dataset_cmd->add_subcommand("gen", "Synthesize the property dataset");
    std::uint64_t gen_seed = default_seed();
    std::string gen_out = "mofs.json";
    std::string gen_anchors;
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--out", gen_out, "Output dataset path");
    gen->add_option("--anchors", gen_anchors, "Anchor records JSON (defaults to built-ins)");
    gen->add_option("--config", config_path, "JSON config file");

    auto *stats = dataset_cmd->add_subcommand("stats", "Class significance statistics");
    std::string stats_dataset = "mofs.json";
    std::string stats_property = "pv";
    std::string stats_mode = "quaternary";
    int stats_threshold = 6;
    std::string stats_out = "stats.json";
    stats->add_option("--dataset", stats_dataset, "Dataset JSON path");
    stats->add_option("--property", stats_property, "Property: pv|h2");
    stats->add_option("--mode", stats_mode, "Label mode: binary|quaternary");
    stats->add_option("--threshold", stats_threshold, "Significance count threshold");
    stats->add_option("--out", stats_out, "Output JSON path");
    stats->add_option("--config", config_path, "JSON config file");

    // train
    auto *train = app.add_subcommand("train", "Train one classifier");
    TrainFlags train_flags;
    train_flags.seed = default_seed();
    std::string train_task = "binary";
    int train_ovr_target = 0;
    std::string train_model_name = "bow";
    std::string train_out_checkpoint = "checkpoint.json";
    std::string train_out_metrics = "metrics.csv";
    train_flags.add_to(train);
    train->add_option("--task", train_task, "Label task: binary|multi|ovr");
    train->add_option("--ovr-target", train_ovr_target, "Target class for --task ovr (0..3)");
    train->add_option("--model", train_model_name, "Model kind: bow|discocat|sequence|stair");
    train->add_option("--out-checkpoint", train_out_checkpoint, "Checkpoint output path");
    train->add_option("--out-metrics", train_out_metrics, "Metrics CSV output path");
    train->add_option("--config", config_path, "JSON config file");

    // compare
    auto *compare = app.add_subcommand("compare", "Train all four model kinds side by side");
    TrainFlags compare_flags;
    compare_flags.seed = default_seed();
    std::string compare_task = "binary";
    std::string compare_out = "compare.csv";
    compare_flags.add_to(compare);
    compare->add_option("--task", compare_task, "Label task: binary|multi");
    compare->add_option("--out", compare_out, "Comparison CSV output path");
    compare->add_option("--config", config_path, "JSON config file");

    // ensemble-train
    auto *etrain = app.add_subcommand("ensemble-train", "Train the one-vs-rest ensemble");
    TrainFlags etrain_flags;
    etrain_flags.seed = default_seed();
    double etrain_threshold = 0.85;
    std::string etrain_out = "ensemble.json";
    etrain_flags.add_to(etrain);
    etrain->add_option("--threshold", etrain_threshold, "Acceptance threshold");
    etrain->add_option("--out", etrain_out, "Ensemble output path");
    etrain->add_option("--config", config_path, "JSON config file");

    // generate
    auto *generate = app.add_subcommand("generate", "Inverse-design benchmark");
    std::string gen_ensemble = "ensemble.json";
    std::string gen_dataset = "mofs.json";
    std::string gen_target = "all";
    int gen_trials = 100;
    double gen_threshold = -1.0;
    int gen_max_iter = 100;
    std::uint64_t gen_seed2 = default_seed();
    bool gen_exact = false;
    std::string gen_report_out = "report.json";
    generate->add_option("--ensemble", gen_ensemble, "Trained ensemble path");
    generate->add_option("--dataset", gen_dataset, "Dataset JSON (ground-truth labels)");
    generate->add_option("--target", gen_target,
                         "Target class (00|01|10|11, low|mod-low|mod-high|high, or all)");
    generate->add_option("--trials", gen_trials, "Trials per target class");
    generate->add_option("--threshold", gen_threshold,
                         "Acceptance threshold (defaults to the ensemble's)");
    generate->add_option("--max-iter", gen_max_iter, "Candidate budget per trial");
    generate->add_option("--seed", gen_seed2, "Random seed");
    generate->add_flag("--exact", gen_exact, "Exact probabilities instead of shot sampling");
    generate->add_option("--out", gen_report_out, "Report JSON output path");
    generate->add_option("--config", config_path, "JSON config file");

    // Config-file keys accepted per subcommand (flag names without the
    // leading dashes). Explicit flags take precedence over file values.
    ConfigSetters gen_setters = {cfg("seed", gen_seed), cfg("out", gen_out),
                                 cfg("anchors", gen_anchors)};
    ConfigSetters stats_setters = {cfg("dataset", stats_dataset), cfg("property", stats_property),
                                   cfg("mode", stats_mode), cfg("threshold", stats_threshold),
                                   cfg("out", stats_out)};
    ConfigSetters train_setters = train_flags.config_setters();
    train_setters.insert({cfg("task", train_task), cfg("ovr-target", train_ovr_target),
                          cfg("model", train_model_name),
                          cfg("out-checkpoint", train_out_checkpoint),
                          cfg("out-metrics", train_out_metrics)});
    ConfigSetters compare_setters = compare_flags.config_setters();
    compare_setters.insert({cfg("task", compare_task), cfg("out", compare_out)});
    ConfigSetters etrain_setters = etrain_flags.config_setters();
    etrain_setters.insert({cfg("threshold", etrain_threshold), cfg("out", etrain_out)});
    ConfigSetters generate_setters = {
        cfg("ensemble", gen_ensemble),    cfg("dataset", gen_dataset),
        cfg("target", gen_target),        cfg("trials", gen_trials),
        cfg("threshold", gen_threshold),  cfg("max-iter", gen_max_iter),
        cfg("seed", gen_seed2),           cfg("exact", gen_exact),
        cfg("out", gen_report_out)};

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("mofqnlp");
    for (const auto &a : args) {
        argv_storage.push_back(a);
    }
    std::vector<const char *> argv;
    argv.reserve(argv_storage.size());
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    if (!config_path.empty()) {
        const std::vector<std::pair<CLI::App *, const ConfigSetters *>> tables = {
            {gen, &gen_setters},       {stats, &stats_setters},
            {train, &train_setters},   {compare, &compare_setters},
            {etrain, &etrain_setters}, {generate, &generate_setters}};
        for (const auto &[cmd, setters] : tables) {
            if (cmd->parsed()) {
                apply_config_file(cmd, *setters, config_path);
            }
        }
    }

    if (gen->parsed()) {
        return run_dataset_gen(gen_seed, gen_out, gen_anchors);
    }
    if (stats->parsed()) {
        return run_dataset_stats(stats_dataset, stats_property, stats_mode, stats_threshold,
                                 stats_out);
    }
    if (train->parsed()) {
        return run_train(train_flags, train_task, train_ovr_target, train_model_name,
                         train_out_checkpoint, train_out_metrics);
    }
    if (compare->parsed()) {
        return run_compare(compare_flags, compare_task, compare_out);
    }
    if (etrain->parsed()) {
        return run_ensemble_train(etrain_flags, etrain_threshold, etrain_out);
    }
    if (generate->parsed()) {
        return run_generate(gen_ensemble, gen_dataset, gen_target, gen_trials, gen_threshold,
                            gen_max_iter, gen_seed2, gen_exact, gen_report_out);
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args) {
    try {
        return run_impl(args);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char *const *argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args);
}

} // namespace mofq::cli
