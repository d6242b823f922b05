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
 * @file dataset.hpp
 * Synthetic property dataset: generation, labeling, splitting, statistics.
 *
 * Properties follow a linear building-block model. Each edge token has a
 * length and each node token a pore factor; pore volume is a fitted linear
 * combination of the two, and uptake is a fitted linear combination of
 * pore volume and a node+edge affinity term. The two coefficient pairs are
 * least-squares fitted at runtime to a small list of anchor frameworks
 * with known property values, then evaluated over every vocabulary
 * combination with a small seeded relative noise term (2% — small enough
 * that edge-length monotonicity of pore volume survives any draw).
 */
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mofq/vocab.hpp"

namespace mofq {

struct PropertyRecord {
    std::string name; ///< "topology node edge"
    double pore_volume = 0.0;
    double h2_uptake = 0.0;
};

enum class Property { PoreVolume, H2Uptake };

std::string to_string(Property p);
Property property_from_string(const std::string &name);
double property_value(const PropertyRecord &r, Property p);

/// Edge strut length in angstroms (table for stock tokens, hashed
/// fallback in the same range for others).
double edge_length(const std::string &edge_token);
/// Additive node contribution to pore volume.
double node_pore_factor(const std::string &node_token);
/// Node / edge contributions to the uptake affinity term.
double node_affinity(const std::string &node_token);
double edge_affinity(const std::string &edge_token);

/// Stock anchor frameworks with their reference property values.
const std::vector<PropertyRecord> &default_anchors();

/**
 * One record per (topology, node, edge) combination in vocabulary order
 * (topology-major, then node, then edge). Requires at least two anchors
 * naming frameworks over this vocabulary; throws when the anchor fit is
 * degenerate. Both properties are strictly positive.
 */
std::vector<PropertyRecord> synthesize_properties(
    const Vocabulary &vocab, std::uint64_t seed,
    const std::vector<PropertyRecord> &anchors = default_anchors());

// ---------------------------------------------------------------------------
// Labels.

enum class LabelMode { Binary, Quaternary, OneVsRest };

std::string to_string(LabelMode mode);
LabelMode label_mode_from_string(const std::string &name);

/// How the binary high/low boundary is chosen.
enum class BoundaryPolicy {
    Median, ///< Rank split at the median — balanced classes (default).
    Fixed,  ///< Caller-supplied absolute boundary value.
};

struct LabelOptions {
    BoundaryPolicy policy = BoundaryPolicy::Median;
    double fixed_boundary = 0.0; ///< Used when policy == Fixed.
    int ovr_target = 0;          ///< OneVsRest: quaternary class mapped to label 0.
};

/**
 * Records plus their integer labels. Binary: 0 low / 1 high. Quaternary:
 * 0..3 by ascending property quartile (ties broken by record order).
 * OneVsRest: 0 = target class, 1 = rest; `quaternary` keeps the
 * underlying 4-class labels.
 */
struct LabeledDataset {
    std::vector<PropertyRecord> records;
    std::vector<int> labels;
    LabelMode mode = LabelMode::Binary;
    Property property = Property::PoreVolume;
    std::vector<double> boundaries; ///< Value cut(s) actually used.
    int ovr_target = -1;
    std::vector<int> quaternary; ///< Filled for OneVsRest.

    int n_classes() const { return mode == LabelMode::Quaternary ? 4 : 2; }
    int label_width() const { return mode == LabelMode::Quaternary ? 2 : 1; }
};

/**
 * Label every record by `property`. Quaternary cuts ranks at
 * round(n/4) / round(n/2) / n - round(n/4) (38/37/37/38 for 150 records)
 * and needs at least 4 records; binary needs at least 2.
 */
LabeledDataset assign_labels(std::vector<PropertyRecord> records, Property property,
                             LabelMode mode, const LabelOptions &options = {});

// ---------------------------------------------------------------------------
// Splits.

/// Record indices per split.
struct SplitSet {
    std::vector<int> train;
    std::vector<int> val;
    std::vector<int> test;
};

/// Proportional 17:7:6 split sizes for n records (85/35/30 at n = 150).
std::array<int, 3> default_split_sizes(int n_records);

/**
 * Seeded stratified split. Classes are shuffled independently and dealt
 * by largest-remainder quotas, so each split's class mix stays within
 * +/-1 of the dataset-wide proportions and the index sets are disjoint.
 * Throws when the requested sizes exceed the record count.
 */
SplitSet split_dataset(const LabeledDataset &data, std::uint64_t seed);
SplitSet split_dataset(const LabeledDataset &data, std::uint64_t seed,
                       const std::array<int, 3> &sizes);

// ---------------------------------------------------------------------------
// Statistics.

/**
 * Per-token class membership counts: row (token, class c) counts the
 * class-c records containing the token; `significant` flags counts >=
 * threshold.
 */
struct SignificanceRow {
    Role role = Role::Node;
    std::string token;
    std::vector<int> counts;
    std::vector<bool> significant;
};

struct SignificanceTable {
    int n_classes = 0;
    int threshold = 6;
    std::vector<SignificanceRow> rows;
};

SignificanceTable class_significance(const LabeledDataset &data, const Vocabulary &vocab,
                                     int threshold = 6);

/**
 * Unit-cell information content: the product of the multiplicities.
 * Empty input gives 1; any multiplicity <= 0 throws.
 */
double compute_ucic(const std::vector<double> &multiplicities);

// ---------------------------------------------------------------------------
// Serialization.

std::string dataset_to_json(const std::vector<PropertyRecord> &records);
std::vector<PropertyRecord> dataset_from_json(const std::string &text);
void save_dataset(const std::string &path, const std::vector<PropertyRecord> &records);
std::vector<PropertyRecord> load_dataset(const std::string &path);

/// Labels + splits sidecar written next to training outputs.
std::string labels_to_json(const LabeledDataset &data, const SplitSet &splits);

std::string significance_to_json(const SignificanceTable &table,
                                 const LabeledDataset &data);

} // namespace mofq
