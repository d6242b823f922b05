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
 * @file rng.hpp
 * Deterministic random streams.
 *
 * Everything random in this project flows through this header so that a
 * (seed, purpose) pair maps to the same byte stream on every platform.
 * std::mt19937_64 output is fully specified by the standard; the uniform
 * mapping and the multinomial draw are hand-rolled because
 * std::uniform_real_distribution and std::discrete_distribution are
 * implementation-defined and would break run reproducibility across
 * standard libraries.
 */
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace mofq {

/// SplitMix64 finalizer: good avalanche, used to derive sub-stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive a child seed from a parent seed and one tag.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(mix64(seed) ^ mix64(tag));
}

/// Derive a child seed from a parent seed and two tags (e.g. example, epoch).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b) {
    return mix_seed(mix_seed(seed, tag_a), tag_b);
}

/**
 * Seeded random stream.
 *
 * Thin wrapper over std::mt19937_64 exposing only the primitives the
 * project needs, each with a fully specified bit-level definition.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1): top 53 bits of one engine draw.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
    }

    /// Bernoulli +/-1 with equal probability.
    double pm1() { return (gen_() & 1u) ? 1.0 : -1.0; }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

/**
 * Draw `shots` multinomial samples over `weights` (unnormalized, all >= 0).
 * Returns a count per category. Inverse-CDF with a cumulative array; ties on
 * the boundary resolve to the later category, and draws are normalized by the
 * final cumulative sum so tiny floating-point defects in the weights cannot
 * push a draw out of range.
 */
inline std::vector<std::uint64_t> multinomial(std::span<const double> weights, std::uint64_t shots,
                                              Rng &rng) {
    std::vector<double> cum(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cum[i] = acc;
    }
    std::vector<std::uint64_t> counts(weights.size(), 0);
    if (weights.empty() || acc <= 0.0) {
        return counts;
    }
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * acc;
        // First index with cum[i] > u.
        std::size_t lo = 0, hi = weights.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cum[mid] > u) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        ++counts[lo];
    }
    return counts;
}

} // namespace mofq
