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
 * @file vocab.hpp
 * Building-block vocabulary and framework-name parsing.
 *
 * A framework name is a three-token sentence "topology node edge"
 * (e.g. "pcu N106 E9"); the vocabulary fixes which tokens may fill each
 * grammatical role.
 */
#include <optional>
#include <string>
#include <vector>

#include "mofq/common.hpp"

namespace mofq {

enum class Role { Topology, Node, Edge };

std::string to_string(Role role);

/**
 * Token lists per role. Tokens must be unique across all three roles —
 * use checked() (or validate()) to enforce that before use.
 */
struct Vocabulary {
    std::vector<std::string> topologies;
    std::vector<std::string> nodes;
    std::vector<std::string> edges;

    /// Throws on an empty role list or a token appearing twice anywhere.
    void validate() const;

    /// Validating factory.
    static Vocabulary checked(std::vector<std::string> topologies, std::vector<std::string> nodes,
                              std::vector<std::string> edges);

    /// Role of a known token, nullopt for a token in no list.
    std::optional<Role> role_of(const std::string &token) const;

    /// All tokens, topology role first, preserving list order.
    std::vector<std::string> all_tokens() const;

    std::size_t combination_count() const {
        return topologies.size() * nodes.size() * edges.size();
    }
};

/// The stock 1-topology / 10-node / 15-edge vocabulary (150 combinations).
const Vocabulary &default_vocabulary();

/**
 * A parsed framework name; always exactly one token per role.
 */
struct MofName {
    std::string topology;
    std::string node;
    std::string edge;

    std::string str() const { return topology + " " + node + " " + edge; }
    bool operator==(const MofName &) const = default;
};

/**
 * Split a whitespace-separated name and check each token against its role.
 * Errors distinguish wrong token count, an unknown token, and a known token
 * in the wrong position (role-order violation).
 */
MofName parse_mof_name(const std::string &text, const Vocabulary &vocab);

} // namespace mofq
