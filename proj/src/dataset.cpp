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
#include "mofq/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "mofq/rng.hpp"

namespace mofq {

using nlohmann::json;

std::string to_string(Property p) {
    return p == Property::PoreVolume ? "pore_volume" : "h2_uptake";
}

Property property_from_string(const std::string &name) {
    if (name == "pore_volume" || name == "pv") {
        return Property::PoreVolume;
    }
    if (name == "h2_uptake" || name == "h2") {
        return Property::H2Uptake;
    }
    throw Error("unknown property \"" + name + "\" (expected pv|h2)");
}

double property_value(const PropertyRecord &r, Property p) {
    return p == Property::PoreVolume ? r.pore_volume : r.h2_uptake;
}

std::string to_string(LabelMode mode) {
    switch (mode) {
    case LabelMode::Binary:
        return "binary";
    case LabelMode::Quaternary:
        return "quaternary";
    case LabelMode::OneVsRest:
        return "one_vs_rest";
    }
    return "?";
}

LabelMode label_mode_from_string(const std::string &name) {
    if (name == "binary") {
        return LabelMode::Binary;
    }
    if (name == "quaternary") {
        return LabelMode::Quaternary;
    }
    if (name == "one_vs_rest") {
        return LabelMode::OneVsRest;
    }
    throw Error("unknown label mode \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Building-block traits.
//
// Stock tokens use fixed tables; tokens outside the stock vocabulary get
// deterministic hash-derived values in the same ranges so custom
// vocabularies still synthesize sensible data.

namespace {

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

/// Hash-derived uniform [0, 1) for a token under a purpose salt.
double token_unit(const std::string &token, std::uint64_t salt) {
    return static_cast<double>(mix64(fnv1a(token) ^ salt) >> 11) * 0x1.0p-53;
}

const std::map<std::string, double> kEdgeLength = {
    {"E9", 14.5},  {"E14", 5.0},   {"E16", 5.6},   {"E28", 6.3},  {"E35", 10.24},
    {"E41", 7.0},  {"E52", 7.8},   {"E70", 4.1},   {"E98", 8.6},  {"E113", 9.4},
    {"E158", 11.2}, {"E184", 12.3}, {"E201", 15.3}, {"E220", 3.56}, {"E229", 16.12},
};

const std::map<std::string, double> kNodePoreFactor = {
    {"N106", 0.42},   {"N123", 0.16},  {"N139", 0.55},  {"N144", -0.60}, {"N155", -0.244},
    {"N173", 0.29},   {"N205", -0.381}, {"N248", -0.579}, {"N394", -0.11}, {"N505", 0.02},
};

const std::map<std::string, double> kNodeAffinity = {
    {"N106", 0.85}, {"N123", 0.62}, {"N139", 0.48}, {"N144", 0.95}, {"N155", 0.70},
    {"N173", 0.55}, {"N205", 0.90}, {"N248", 0.50}, {"N394", 0.78}, {"N505", 0.66},
};

const std::map<std::string, double> kEdgeAffinity = {
    {"E9", 1.8925},  {"E14", 1.775},  {"E16", 1.651},  {"E28", 1.730},  {"E35", 2.7675},
    {"E41", 1.805},  {"E52", 1.886},  {"E70", 1.464},  {"E98", 1.963},  {"E113", 2.036},
    {"E158", 2.190}, {"E184", 2.279}, {"E201", 2.501}, {"E220", 1.0715}, {"E229", 2.558},
};

} // namespace

double edge_length(const std::string &edge_token) {
    if (const auto it = kEdgeLength.find(edge_token); it != kEdgeLength.end()) {
        return it->second;
    }
    return 3.56 + 12.56 * token_unit(edge_token, 0xed6eULL);
}

double node_pore_factor(const std::string &node_token) {
    if (const auto it = kNodePoreFactor.find(node_token); it != kNodePoreFactor.end()) {
        return it->second;
    }
    return -0.6 + 1.15 * token_unit(node_token, 0x90deULL);
}

double node_affinity(const std::string &node_token) {
    if (const auto it = kNodeAffinity.find(node_token); it != kNodeAffinity.end()) {
        return it->second;
    }
    return 0.4 + 0.6 * token_unit(node_token, 0xaff1ULL);
}

double edge_affinity(const std::string &edge_token) {
    if (const auto it = kEdgeAffinity.find(edge_token); it != kEdgeAffinity.end()) {
        return it->second;
    }
    return 0.35 + 0.55 * std::sqrt(edge_length(edge_token));
}

const std::vector<PropertyRecord> &default_anchors() {
    static const std::vector<PropertyRecord> anchors = {
        {"pcu N248 E220", 0.262, 4.06},
        {"pcu N205 E14", 0.757, 8.0},
        {"pcu N205 E35", 1.91, 14.02},
        {"pcu N155 E9", 2.97, 15.58},
    };
    return anchors;
}

namespace {

/// Least-squares coefficients (a, b) of y ~ a*x1 + b*x2.
std::pair<double, double> fit2(const std::vector<std::array<double, 3>> &rows) {
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    for (const auto &[x1, x2, y] : rows) {
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        r1 += x1 * y;
        r2 += x2 * y;
    }
    const double det = s11 * s22 - s12 * s12;
    if (std::abs(det) < 1e-12) {
        throw Error("synthesize_properties: anchor fit is degenerate");
    }
    return {(r1 * s22 - r2 * s12) / det, (s11 * r2 - s12 * r1) / det};
}

// Relative noise amplitude. Must stay below half the smallest relative
// pore-volume gap between adjacent edge lengths or the monotonicity
// guarantee would break for unlucky seeds.
constexpr double kNoiseFraction = 0.02;

} // namespace

std::vector<PropertyRecord> synthesize_properties(const Vocabulary &vocab, std::uint64_t seed,
                                                  const std::vector<PropertyRecord> &anchors) {
    vocab.validate();
    if (anchors.size() < 2) {
        throw Error("synthesize_properties: need at least 2 anchors, got " +
                    std::to_string(anchors.size()));
    }

    // Fit pore volume ~ alpha * edge_length + beta * node_pore_factor.
    std::vector<std::array<double, 3>> pv_rows;
    std::vector<std::array<double, 3>> h2_rows;
    for (const auto &a : anchors) {
        const MofName name = parse_mof_name(a.name, vocab);
        pv_rows.push_back({edge_length(name.edge), node_pore_factor(name.node), a.pore_volume});
        h2_rows.push_back(
            {a.pore_volume, node_affinity(name.node) + edge_affinity(name.edge), a.h2_uptake});
    }
    const auto [alpha, beta] = fit2(pv_rows);
    // Fit uptake ~ gamma * pore_volume + delta * affinity.
    const auto [gamma, delta] = fit2(h2_rows);

    std::vector<PropertyRecord> records;
    records.reserve(vocab.combination_count());
    std::size_t index = 0;
    for (const auto &topo : vocab.topologies) {
        for (const auto &node : vocab.nodes) {
            for (const auto &edge : vocab.edges) {
                Rng rng(mix_seed(seed, 0xda7aULL, index));
                const double pv_clean = alpha * edge_length(edge) + beta * node_pore_factor(node);
                const double pv =
                    pv_clean * (1.0 + kNoiseFraction * (2.0 * rng.uniform01() - 1.0));
                const double h2_clean =
                    gamma * pv + delta * (node_affinity(node) + edge_affinity(edge));
                const double h2 =
                    h2_clean * (1.0 + kNoiseFraction * (2.0 * rng.uniform01() - 1.0));
                if (!(pv > 0.0) || !(h2 > 0.0)) {
                    throw Error("synthesize_properties: non-positive property for " + topo + " " +
                                node + " " + edge + " (anchors inconsistent with trait model)");
                }
                records.push_back({topo + " " + node + " " + edge, pv, h2});
                ++index;
            }
        }
    }
    return records;
}

// ---------------------------------------------------------------------------
// Labels.

namespace {

/// Record indices sorted by (property value, index) — stable tie order.
std::vector<int> ranked_indices(const std::vector<PropertyRecord> &records, Property property) {
    std::vector<int> idx(records.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return property_value(records[static_cast<std::size_t>(a)], property) <
               property_value(records[static_cast<std::size_t>(b)], property);
    });
    return idx;
}

double midpoint(const std::vector<PropertyRecord> &records, Property property,
                const std::vector<int> &ranked, int cut) {
    const double lo =
        property_value(records[static_cast<std::size_t>(ranked[static_cast<std::size_t>(cut - 1)])],
                       property);
    const double hi = property_value(
        records[static_cast<std::size_t>(ranked[static_cast<std::size_t>(cut)])], property);
    return 0.5 * (lo + hi);
}

std::vector<int> quaternary_labels(const std::vector<PropertyRecord> &records, Property property,
                                   std::vector<double> &boundaries) {
    const int n = static_cast<int>(records.size());
    if (n < 4) {
        throw Error("assign_labels: quaternary labeling needs at least 4 records, got " +
                    std::to_string(n));
    }
    const auto ranked = ranked_indices(records, property);
    const int c1 = static_cast<int>(std::lround(0.25 * n));
    const int c2 = static_cast<int>(std::lround(0.5 * n));
    const int c3 = n - c1;
    std::vector<int> labels(records.size(), 0);
    for (int r = 0; r < n; ++r) {
        const int cls = r < c1 ? 0 : (r < c2 ? 1 : (r < c3 ? 2 : 3));
        labels[static_cast<std::size_t>(ranked[static_cast<std::size_t>(r)])] = cls;
    }
    boundaries = {midpoint(records, property, ranked, c1), midpoint(records, property, ranked, c2),
                  midpoint(records, property, ranked, c3)};
    return labels;
}

} // namespace

LabeledDataset assign_labels(std::vector<PropertyRecord> records, Property property,
                             LabelMode mode, const LabelOptions &options) {
    LabeledDataset out;
    out.property = property;
    out.mode = mode;

    switch (mode) {
    case LabelMode::Binary: {
        const int n = static_cast<int>(records.size());
        if (options.policy == BoundaryPolicy::Median) {
            if (n < 2) {
                throw Error("assign_labels: median split needs at least 2 records");
            }
            const auto ranked = ranked_indices(records, property);
            const int cut = (n + 1) / 2; // Low half takes the extra record.
            out.labels.assign(records.size(), 0);
            for (int r = cut; r < n; ++r) {
                out.labels[static_cast<std::size_t>(ranked[static_cast<std::size_t>(r)])] = 1;
            }
            out.boundaries = {midpoint(records, property, ranked, cut)};
        } else {
            out.labels.reserve(records.size());
            for (const auto &rec : records) {
                out.labels.push_back(property_value(rec, property) > options.fixed_boundary ? 1
                                                                                            : 0);
            }
            out.boundaries = {options.fixed_boundary};
        }
        break;
    }
    case LabelMode::Quaternary: {
        out.labels = quaternary_labels(records, property, out.boundaries);
        break;
    }
    case LabelMode::OneVsRest: {
        if (options.ovr_target < 0 || options.ovr_target > 3) {
            throw Error("assign_labels: one-vs-rest target class must be in 0..3");
        }
        out.quaternary = quaternary_labels(records, property, out.boundaries);
        out.ovr_target = options.ovr_target;
        out.labels.reserve(records.size());
        for (int q : out.quaternary) {
            out.labels.push_back(q == options.ovr_target ? 0 : 1);
        }
        break;
    }
    }
    out.records = std::move(records);
    return out;
}

// ---------------------------------------------------------------------------
// Splits.

std::array<int, 3> default_split_sizes(int n_records) {
    // Largest-remainder apportionment of 17:7:6.
    const int weights[3] = {17, 7, 6};
    std::array<int, 3> sizes{};
    double fracs[3];
    int assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double q = static_cast<double>(n_records) * weights[i] / 30.0;
        sizes[static_cast<std::size_t>(i)] = static_cast<int>(std::floor(q));
        fracs[i] = q - std::floor(q);
        assigned += sizes[static_cast<std::size_t>(i)];
    }
    for (int left = n_records - assigned; left > 0; --left) {
        int best = 0;
        for (int i = 1; i < 3; ++i) {
            if (fracs[i] > fracs[best]) {
                best = i;
            }
        }
        ++sizes[static_cast<std::size_t>(best)];
        fracs[best] = -1.0;
    }
    return sizes;
}

namespace {

/// Integer allocation per class: largest remainder on quotas
/// available[c] * target / total, ties to the lower class id.
std::vector<int> apportion(const std::vector<int> &available, int target) {
    const int total = std::accumulate(available.begin(), available.end(), 0);
    std::vector<int> take(available.size(), 0);
    if (target == 0 || total == 0) {
        return take;
    }
    std::vector<double> fracs(available.size(), 0.0);
    int assigned = 0;
    for (std::size_t c = 0; c < available.size(); ++c) {
        const double q = static_cast<double>(available[c]) * target / total;
        take[c] = static_cast<int>(std::floor(q));
        fracs[c] = q - std::floor(q);
        assigned += take[c];
    }
    for (int left = target - assigned; left > 0; --left) {
        std::size_t best = 0;
        double best_frac = -1.0;
        for (std::size_t c = 0; c < available.size(); ++c) {
            if (fracs[c] > best_frac) {
                best_frac = fracs[c];
                best = c;
            }
        }
        ++take[best];
        fracs[best] = -1.0;
    }
    return take;
}

} // namespace

SplitSet split_dataset(const LabeledDataset &data, std::uint64_t seed) {
    return split_dataset(data, seed, default_split_sizes(static_cast<int>(data.records.size())));
}

SplitSet split_dataset(const LabeledDataset &data, std::uint64_t seed,
                       const std::array<int, 3> &sizes) {
    const int n = static_cast<int>(data.records.size());
    if (data.labels.size() != data.records.size()) {
        throw Error("split_dataset: labels and records disagree");
    }
    if (sizes[0] < 0 || sizes[1] < 0 || sizes[2] < 0 || sizes[0] + sizes[1] + sizes[2] > n) {
        throw Error("split_dataset: split sizes exceed record count");
    }

    const int n_classes = 1 + *std::max_element(data.labels.begin(), data.labels.end());
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n_classes));
    for (int i = 0; i < n; ++i) {
        members[static_cast<std::size_t>(data.labels[static_cast<std::size_t>(i)])].push_back(i);
    }
    // Independent seeded shuffle inside each class.
    for (std::size_t c = 0; c < members.size(); ++c) {
        auto &m = members[c];
        Rng rng(mix_seed(seed, 0x59717ULL, c));
        for (std::size_t i = m.size(); i > 1; --i) {
            std::swap(m[i - 1], m[rng.below(i)]);
        }
    }

    SplitSet out;
    std::vector<int> cursor(members.size(), 0);
    std::vector<int> *splits[3] = {&out.train, &out.val, &out.test};
    for (int s = 0; s < 3; ++s) {
        std::vector<int> available(members.size());
        for (std::size_t c = 0; c < members.size(); ++c) {
            available[c] = static_cast<int>(members[c].size()) - cursor[c];
        }
        const std::vector<int> take = apportion(available, sizes[static_cast<std::size_t>(s)]);
        for (std::size_t c = 0; c < members.size(); ++c) {
            for (int k = 0; k < take[c]; ++k) {
                splits[s]->push_back(members[c][static_cast<std::size_t>(cursor[c]++)]);
            }
        }
        std::sort(splits[s]->begin(), splits[s]->end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Statistics.

SignificanceTable class_significance(const LabeledDataset &data, const Vocabulary &vocab,
                                     int threshold) {
    SignificanceTable table;
    table.n_classes = data.n_classes();
    table.threshold = threshold;

    const auto add_rows = [&](Role role, const std::vector<std::string> &tokens) {
        for (const auto &tok : tokens) {
            SignificanceRow row;
            row.role = role;
            row.token = tok;
            row.counts.assign(static_cast<std::size_t>(table.n_classes), 0);
            table.rows.push_back(std::move(row));
        }
    };
    add_rows(Role::Topology, vocab.topologies);
    add_rows(Role::Node, vocab.nodes);
    add_rows(Role::Edge, vocab.edges);

    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        row_of[table.rows[i].token] = i;
    }
    for (std::size_t i = 0; i < data.records.size(); ++i) {
        const MofName name = parse_mof_name(data.records[i].name, vocab);
        const int cls = data.labels[i];
        for (const auto &tok : {name.topology, name.node, name.edge}) {
            auto &row = table.rows[row_of.at(tok)];
            ++row.counts[static_cast<std::size_t>(cls)];
        }
    }
    for (auto &row : table.rows) {
        row.significant.reserve(row.counts.size());
        for (int c : row.counts) {
            row.significant.push_back(c >= threshold);
        }
    }
    return table;
}

double compute_ucic(const std::vector<double> &multiplicities) {
    double product = 1.0;
    for (double m : multiplicities) {
        if (!(m > 0.0)) {
            throw Error("compute_ucic: multiplicities must be positive");
        }
        product *= m;
    }
    return product;
}

// ---------------------------------------------------------------------------
// Serialization.

std::string dataset_to_json(const std::vector<PropertyRecord> &records) {
    json mofs = json::array();
    for (const auto &r : records) {
        mofs.push_back(
            {{"name", r.name}, {"pore_volume", r.pore_volume}, {"h2_uptake", r.h2_uptake}});
    }
    return json{{"mofs", mofs}}.dump(2) + "\n";
}

std::vector<PropertyRecord> dataset_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &e) {
        throw Error(std::string("dataset: invalid JSON: ") + e.what());
    }
    std::vector<PropertyRecord> records;
    std::set<std::string> names;
    try {
        for (const auto &m : j.at("mofs")) {
            PropertyRecord r;
            r.name = m.at("name").get<std::string>();
            r.pore_volume = m.at("pore_volume").get<double>();
            r.h2_uptake = m.at("h2_uptake").get<double>();
            if (!std::isfinite(r.pore_volume) || !std::isfinite(r.h2_uptake)) {
                throw Error("dataset: non-finite property for \"" + r.name + "\"");
            }
            if (!names.insert(r.name).second) {
                throw Error("dataset: duplicate name \"" + r.name + "\"");
            }
            records.push_back(std::move(r));
        }
    } catch (const json::exception &e) {
        throw Error(std::string("dataset: missing or mistyped field: ") + e.what());
    }
    return records;
}

void save_dataset(const std::string &path, const std::vector<PropertyRecord> &records) {
    write_text_file(path, dataset_to_json(records));
}

std::vector<PropertyRecord> load_dataset(const std::string &path) {
    return dataset_from_json(read_text_file(path));
}

std::string labels_to_json(const LabeledDataset &data, const SplitSet &splits) {
    json j;
    j["mode"] = to_string(data.mode);
    j["property"] = to_string(data.property);
    j["boundaries"] = data.boundaries;
    if (data.mode == LabelMode::OneVsRest) {
        j["ovr_target"] = data.ovr_target;
    }
    json labels = json::object();
    for (std::size_t i = 0; i < data.records.size(); ++i) {
        labels[data.records[i].name] = data.labels[i];
    }
    j["labels"] = labels;
    const auto names_of = [&](const std::vector<int> &idx) {
        json names = json::array();
        for (int i : idx) {
            names.push_back(data.records[static_cast<std::size_t>(i)].name);
        }
        return names;
    };
    j["splits"] = {{"train", names_of(splits.train)},
                   {"val", names_of(splits.val)},
                   {"test", names_of(splits.test)}};
    return j.dump(2) + "\n";
}

std::string significance_to_json(const SignificanceTable &table, const LabeledDataset &data) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        rows.push_back({{"role", to_string(row.role)},
                        {"token", row.token},
                        {"counts", row.counts},
                        {"significant", row.significant}});
    }
    json j;
    j["mode"] = to_string(data.mode);
    j["property"] = to_string(data.property);
    j["boundaries"] = data.boundaries;
    j["n_classes"] = table.n_classes;
    j["threshold"] = table.threshold;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

} // namespace mofq
