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
 * @file pregroup.hpp
 * Pregroup types and grammatical reduction.
 *
 * A type is an atom with an optional adjoint mark: x (plain), x^l (left
 * adjoint), x^r (right adjoint). Reduction repeatedly contracts adjacent
 * pairs using the two cancellation rules
 *
 *     x  . x^r -> 1        x^l . x -> 1
 *
 * until no pair applies. A sentence is grammatical when a single plain
 * type remains; each contraction becomes a cup (wire pairing) in the
 * string diagram.
 */
#include <string>
#include <utility>
#include <vector>

namespace mofq {

/**
 * One pregroup type: atom name plus adjoint mark.
 * adj = 0 plain, -1 left adjoint, +1 right adjoint.
 */
struct PgType {
    std::string atom;
    int adj = 0;

    bool operator==(const PgType &) const = default;
};

inline PgType plain(std::string atom) { return {std::move(atom), 0}; }
inline PgType left_adj(std::string atom) { return {std::move(atom), -1}; }
inline PgType right_adj(std::string atom) { return {std::move(atom), +1}; }

std::string to_string(const PgType &t);
std::string to_string(const std::vector<PgType> &types);

/**
 * Reduction outcome: the residual type list plus the contracted index
 * pairs (positions in the input list, left index first).
 */
struct Reduction {
    std::vector<PgType> residual;
    std::vector<std::pair<int, int>> cups;
};

/**
 * Contract to a fixpoint. Pregroup contraction is confluent, so the
 * single-pass stack algorithm used here yields the canonical residual.
 * Empty input reduces to empty output.
 */
Reduction reduce_with_links(const std::vector<PgType> &types);

/// Residual only.
std::vector<PgType> pregroup_reduce(const std::vector<PgType> &types);

} // namespace mofq
