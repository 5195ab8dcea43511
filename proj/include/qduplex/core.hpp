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

#ifndef QDUPLEX_CORE_HPP
#define QDUPLEX_CORE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qduplex/rng.hpp"

namespace qduplex {

using Complex = std::complex<double>;

// Tolerance policy: structural invariants (normalization, hermiticity,
// unitarity) are enforced at 1e-10; iterative or otherwise accumulated
// numeric results are compared at 1e-9.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kNumericTol = 1e-9;

// Basis index convention, fixed once for every tensor / apply / trace
// operation in the library: qubit 1 is the most significant bit of the
// basis index, so a two-qubit amplitude vector is ordered
// |00>, |01>, |10>, |11>.

/// Dense square complex matrix, row-major. Sized for the 2x2 and 4x4
/// operators this library works with; dimension is dynamic for convenience.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex s) const;

    Complex trace() const;
    /// Largest entry magnitude of (*this - rhs).
    double max_abs_diff(const ComplexMatrix& rhs) const;
    double max_abs() const;
    bool all_finite() const;
    bool is_hermitian(double tol) const;

  private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, iterated
/// until the off-diagonal Frobenius norm drops below 1e-12. Unsorted.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Normalized pure state over 1 or 2 qubits.
class PureState {
  public:
    PureState(std::vector<Complex> amplitudes, int qubit_count);

    static PureState basis(int qubit_count, int index);

    int qubit_count() const { return qubit_count_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    const Complex& amp(int i) const { return amps_[static_cast<std::size_t>(i)]; }

  private:
    std::vector<Complex> amps_;
    int qubit_count_;
};

class UnitaryOperator {
  public:
    UnitaryOperator(ComplexMatrix m, int qubit_count);

    static UnitaryOperator identity(int qubit_count);

    int qubit_count() const { return qubit_count_; }
    const ComplexMatrix& matrix() const { return m_; }

    UnitaryOperator adjoint() const { return UnitaryOperator(m_.adjoint(), qubit_count_); }
    UnitaryOperator operator*(const UnitaryOperator& rhs) const;

  private:
    ComplexMatrix m_;
    int qubit_count_;
};

/// Hermitian, unit-trace, positive-semidefinite operator (eigenvalues are
/// allowed to dip to -1e-9 to absorb rounding).
class DensityOperator {
  public:
    DensityOperator(ComplexMatrix m, int qubit_count);

    static DensityOperator from_pure(const PureState& psi);
    static DensityOperator maximally_mixed(int qubit_count);

    int qubit_count() const { return qubit_count_; }
    const ComplexMatrix& matrix() const { return m_; }

    /// Convex combination w*this + (1-w)*other.
    DensityOperator mixed_with(const DensityOperator& other, double w) const;

  private:
    ComplexMatrix m_;
    int qubit_count_;
};

/// The three Pauli matrices as 2x2 unitaries.
struct PauliVector {
    UnitaryOperator sigma_x;
    UnitaryOperator sigma_y;
    UnitaryOperator sigma_z;
};

const PauliVector& paulis();

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* bell_outcome_name(BellOutcome o);

/// The Bell state for an outcome label:
/// PhiPlus  (|00>+|11>)/sqrt2,  PhiMinus (|00>-|11>)/sqrt2,
/// PsiPlus  (|01>+|10>)/sqrt2,  PsiMinus (|01>-|10>)/sqrt2.
const PureState& bell_state(BellOutcome o);

/// exp(i*lambda*(c . sigma)) in closed axis-angle form,
/// cos(theta)*I + i*sin(theta)*(chat . sigma) with theta = lambda*|c|.
/// |c| = 0 gives the identity. Always has determinant 1.
UnitaryOperator pauli_exponential(const std::array<double, 3>& c, double lambda);

PureState tensor_product(const PureState& a, const PureState& b);
UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b);

/// u acting on the full state space (dimensions must match).
PureState apply_unitary(const PureState& state, const UnitaryOperator& u);

/// Single-qubit unitary on qubit `target` (1 or 2) of a two-qubit state,
/// i.e. (u x I) for target 1 and (I x u) for target 2.
PureState apply_single_qubit(const PureState& state, const UnitaryOperator& u, int target);

/// Trace out everything except qubit `keep` (1 or 2) of a two-qubit state.
DensityOperator partial_trace(const DensityOperator& rho, int keep);

/// Overlap probabilities with the four Bell states, ordered
/// (PhiPlus, PhiMinus, PsiPlus, PsiMinus). Sums to 1 for normalized input.
std::array<double, 4> bell_probabilities(const PureState& state);

/// Projective Bell-basis measurement. Returns the sampled outcome together
/// with its exact (not empirical) probability.
std::pair<BellOutcome, double> measure_bell_basis(const PureState& state, RandomStream& rng);

/// -sum lambda_i log2 lambda_i, in bits. One-qubit spectra come from the
/// Bloch-length closed form, two-qubit spectra from the Jacobi solver;
/// eigenvalues are clamped to [0, 1] before taking logs.
double von_neumann_entropy(const DensityOperator& rho);

/// |<a|b>|^2; invariant under a global phase on either argument.
double fidelity(const PureState& a, const PureState& b);

/// (Tr(rho sx), Tr(rho sy), Tr(rho sz)) for a one-qubit state.
std::array<double, 3> bloch_vector(const DensityOperator& rho);

}  // namespace qduplex

#endif
