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
 * @file cli.hpp
 * Command-line front end.
 *
 * Subcommands: dataset gen | dataset stats | train | compare |
 * ensemble-train | generate. Option precedence: built-in defaults, then
 * the MOFQNLP_SEED environment variable (seed only), then --config JSON
 * values, then explicit flags. Every run writes a metadata record
 * (resolved config, seed, version) next to its outputs; no output embeds
 * a timestamp, so reruns with the same seed are byte-identical.
 */
#include <string>
#include <vector>

namespace mofq::cli {

/// Run one command; args exclude the program name. Returns the process
/// exit code (0 on success).
int run(const std::vector<std::string> &args);

int run(int argc, const char *const *argv);

} // namespace mofq::cli
