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
#include "mofq/pregroup.hpp"

namespace mofq {

std::string to_string(const PgType &t) {
    if (t.adj < 0) {
        return t.atom + "^l";
    }
    if (t.adj > 0) {
        return t.atom + "^r";
    }
    return t.atom;
}

std::string to_string(const std::vector<PgType> &types) {
    std::string out = "[";
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(types[i]);
    }
    return out + "]";
}

namespace {

/// True when the adjacent pair a.b contracts: x.x^r or x^l.x.
bool contracts(const PgType &a, const PgType &b) {
    if (a.atom != b.atom) {
        return false;
    }
    return (a.adj == 0 && b.adj == +1) || (a.adj == -1 && b.adj == 0);
}

} // namespace

Reduction reduce_with_links(const std::vector<PgType> &types) {
    Reduction out;
    std::vector<std::pair<PgType, int>> stack; // type + original index
    for (std::size_t i = 0; i < types.size(); ++i) {
        const auto &t = types[i];
        if (!stack.empty() && contracts(stack.back().first, t)) {
            out.cups.emplace_back(stack.back().second, static_cast<int>(i));
            stack.pop_back();
        } else {
            stack.emplace_back(t, static_cast<int>(i));
        }
    }
    out.residual.reserve(stack.size());
    for (auto &[t, idx] : stack) {
        out.residual.push_back(std::move(t));
    }
    return out;
}

std::vector<PgType> pregroup_reduce(const std::vector<PgType> &types) {
    return reduce_with_links(types).residual;
}

} // namespace mofq
