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

#include "qduplex/rng.hpp"

#include <cmath>

namespace qduplex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15uLL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9uLL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBuLL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t RandomStream::derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

double RandomStream::gaussian() {
    // 1 - uniform01() lies in (0, 1], keeping the log argument nonzero.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace qduplex
