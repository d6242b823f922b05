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
 * @file common.hpp
 * Shared error type and project constants.
 */
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mofq {

inline constexpr const char *kVersion = "0.1.0";

/**
 * Error thrown on contract violations (bad arguments, malformed files,
 * unbound parameters). All library errors funnel through this type so
 * callers can catch one thing.
 */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file for reading: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw Error("write failed: " + path);
    }
}

} // namespace mofq
