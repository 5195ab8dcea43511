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

// Independent oracles for the test suite. Everything here is computed by a
// different route than the library code under test: the matrix exponential
// by a scaled Taylor series instead of the axis-angle closed form, channel
// averages by closed-form Gaussian integrals instead of Monte Carlo.

#ifndef QDUPLEX_TESTS_ORACLES_HPP
#define QDUPLEX_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>

#include "qduplex/core.hpp"

namespace oracle {

/// exp(A) via scaling-and-squaring around a 30-term Taylor core. The plain
/// series alone is not accurate enough at the spectral radii this suite
/// probes (up to ~60), hence the scaling step.
inline qduplex::ComplexMatrix expm(const qduplex::ComplexMatrix& a) {
    using qduplex::Complex;
    using qduplex::ComplexMatrix;

    int squarings = 0;
    double scale = a.max_abs() * a.dim();  // cheap norm upper bound
    while (scale > 0.25 && squarings < 64) {
        scale *= 0.5;
        ++squarings;
    }

    const double inv = std::ldexp(1.0, -squarings);
    ComplexMatrix x = a.scaled(Complex(inv, 0.0));

    ComplexMatrix sum = ComplexMatrix::identity(a.dim());
    ComplexMatrix term = ComplexMatrix::identity(a.dim());
    for (int k = 1; k <= 30; ++k) {
        term = term * x.scaled(Complex(1.0 / k, 0.0));
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

/// i * lambda * (c . sigma) assembled entry by entry, for feeding expm.
inline qduplex::ComplexMatrix pauli_generator(const std::array<double, 3>& c, double lambda) {
    using qduplex::Complex;
    qduplex::ComplexMatrix g(2);
    // i*l*(cx*sx + cy*sy + cz*sz):
    //   [ i*l*cz          i*l*cx + l*cy ]
    //   [ i*l*cx - l*cy  -i*l*cz        ]
    g.at(0, 0) = Complex(0.0, lambda * c[2]);
    g.at(0, 1) = Complex(lambda * c[1], lambda * c[0]);
    g.at(1, 0) = Complex(-lambda * c[1], lambda * c[0]);
    g.at(1, 1) = Complex(0.0, -lambda * c[2]);
    return g;
}

inline double binary_entropy(double x) {
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

/// Bloch-vector contraction factor of the Gaussian-averaged channel.
///
/// Derivation: the average of exp(i*l*c.sigma) rho exp(-i*l*c.sigma) over
/// c ~ N(0, I3) shrinks every Bloch component by
///   a(l) = E[ (1 + 2 cos(2 l |c|)) / 3 ],
/// and for |c| chi-distributed with 3 degrees of freedom
///   E[cos(t |c|)] = (1 - t^2) exp(-t^2 / 2),
/// giving a(l) = (1 + 2 (1 - 4 l^2) exp(-2 l^2)) / 3.  The limit is 1/3,
/// not 0: the channel never fully depolarizes.
inline double bloch_contraction(double lambda) {
    const double l2 = lambda * lambda;
    return (1.0 + 2.0 * (1.0 - 4.0 * l2) * std::exp(-2.0 * l2)) / 3.0;
}

/// Holevo quantity of {1/2: E(|0><0|), 1/2: E(|1><1|)} for a channel that
/// contracts Bloch vectors by a: components have eigenvalues (1 +- a)/2.
inline double chi_of_contraction(double a) {
    return 1.0 - binary_entropy(0.5 * (1.0 + std::abs(a)));
}

/// Message error rate of the blind (no-feedback) per-pair protocol.
///
/// Derivation: with the channel unitary U on pair member 1 and the codec
/// Pauli on member 2, the probability of decoding the sent message is
/// |<singlet| (U x I) |singlet>|^2 = (Tr U / 2)^2 = cos^2(l |c|); averaging
/// with the chi-3 identity above gives
///   P(correct) = (1 + (1 - 4 l^2) exp(-2 l^2)) / 2.
inline double blind_pair_error(double lambda) {
    const double l2 = lambda * lambda;
    return 0.5 * (1.0 - (1.0 - 4.0 * l2) * std::exp(-2.0 * l2));
}

// Reference constants, each evaluated independently (binary entropy by the
// formula above at exact rational arguments).
inline constexpr double kH2OfQuarter = 0.8112781244591328;      // H2(1/4) = H2(3/4)
inline constexpr double kOneMinusH2OfThreeQuarters = 0.18872187554086717;
inline constexpr double kOneMinusH2OfElevenHundredths = 0.500084041835472;
inline constexpr double kChiLimit = 0.08170416594551044;        // 1 - H2(2/3)

}  // namespace oracle

#endif
