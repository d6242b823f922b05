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
#include "mofq/vocab.hpp"

#include <set>
#include <sstream>

namespace mofq {

std::string to_string(Role role) {
    switch (role) {
    case Role::Topology:
        return "topology";
    case Role::Node:
        return "node";
    case Role::Edge:
        return "edge";
    }
    return "?";
}

void Vocabulary::validate() const {
    if (topologies.empty() || nodes.empty() || edges.empty()) {
        throw Error("Vocabulary: every role needs at least one token");
    }
    std::set<std::string> seen;
    for (const auto *list : {&topologies, &nodes, &edges}) {
        for (const auto &token : *list) {
            if (token.empty()) {
                throw Error("Vocabulary: empty token");
            }
            if (!seen.insert(token).second) {
                throw Error("Vocabulary: token \"" + token + "\" appears more than once");
            }
        }
    }
}

Vocabulary Vocabulary::checked(std::vector<std::string> topologies, std::vector<std::string> nodes,
                               std::vector<std::string> edges) {
    Vocabulary v{std::move(topologies), std::move(nodes), std::move(edges)};
    v.validate();
    return v;
}

std::optional<Role> Vocabulary::role_of(const std::string &token) const {
    for (const auto &t : topologies) {
        if (t == token) {
            return Role::Topology;
        }
    }
    for (const auto &t : nodes) {
        if (t == token) {
            return Role::Node;
        }
    }
    for (const auto &t : edges) {
        if (t == token) {
            return Role::Edge;
        }
    }
    return std::nullopt;
}

std::vector<std::string> Vocabulary::all_tokens() const {
    std::vector<std::string> out;
    out.reserve(topologies.size() + nodes.size() + edges.size());
    out.insert(out.end(), topologies.begin(), topologies.end());
    out.insert(out.end(), nodes.begin(), nodes.end());
    out.insert(out.end(), edges.begin(), edges.end());
    return out;
}

const Vocabulary &default_vocabulary() {
    static const Vocabulary vocab = Vocabulary::checked(
        {"pcu"},
        {"N106", "N123", "N139", "N144", "N155", "N173", "N205", "N248", "N394", "N505"},
        {"E9", "E14", "E16", "E28", "E35", "E41", "E52", "E70", "E98", "E113", "E158", "E184",
         "E201", "E220", "E229"});
    return vocab;
}

MofName parse_mof_name(const std::string &text, const Vocabulary &vocab) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    if (tokens.size() != 3) {
        throw Error("parse_mof_name: expected 3 tokens (topology node edge), got " +
                    std::to_string(tokens.size()) + " in \"" + text + "\"");
    }
    constexpr Role expected[3] = {Role::Topology, Role::Node, Role::Edge};
    for (int i = 0; i < 3; ++i) {
        const auto role = vocab.role_of(tokens[static_cast<std::size_t>(i)]);
        if (!role.has_value()) {
            throw Error("parse_mof_name: unknown token \"" + tokens[static_cast<std::size_t>(i)] +
                        "\"");
        }
        if (*role != expected[i]) {
            throw Error("parse_mof_name: role-order violation — token \"" +
                        tokens[static_cast<std::size_t>(i)] + "\" is a " + to_string(*role) +
                        " token but position " + std::to_string(i) + " needs a " +
                        to_string(expected[i]) + " token");
        }
    }
    return MofName{tokens[0], tokens[1], tokens[2]};
}

} // namespace mofq
