// Copyright 2026 The qduplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDUPLEX_RNG_HPP
#define QDUPLEX_RNG_HPP

#include <cstdint>
#include <random>

namespace qduplex {

/// Reproducible random stream.
///
/// Every distribution is derived from the mt19937_64 output through fixed,
/// documented transforms so that equal seeds give bit-identical draw
/// sequences on every platform:
///   uniform01: (next_u64() >> 11) * 2^-53, in [0, 1)
///   gaussian:  Box-Muller cosine branch, consuming exactly two uniforms
///              per call (no cached spare, so draw indices stay stable)
/// Streams must not be shared across concurrent tasks; derive one
/// independent substream per task instead.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    /// Stateless seed mixer (splitmix64) for per-trial substreams keyed by
    /// (master seed, trial index).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

    static RandomStream substream(std::uint64_t master, std::uint64_t index) {
        return RandomStream(derive_seed(master, index));
    }

    std::uint64_t next_u64() { return gen_(); }

    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal draw, N(0, 1).
    double gaussian();

    bool bernoulli(double p) { return uniform01() < p; }

    int bit() { return bernoulli(0.5) ? 1 : 0; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace qduplex

#endif
