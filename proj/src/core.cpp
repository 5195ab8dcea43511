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

#include "qduplex/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qduplex {

namespace {

constexpr double kJacobiOffTol = 1e-12;
constexpr double kEigenFloor = -1e-9;

int dim_for_qubits(int qubit_count) {
    if (qubit_count < 1 || qubit_count > 2) {
        throw std::invalid_argument("qubit_count must be 1 or 2");
    }
    return 1 << qubit_count;
}

double entropy_from_eigenvalues(const std::vector<double>& eigs) {
    double s = 0.0;
    for (double e : eigs) {
        const double p = std::clamp(e, 0.0, 1.0);
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

// Eigenvalues of a Hermitian 2x2 [[a, b], [conj(b), d]] in closed form.
std::array<double, 2> hermitian2_eigenvalues(const ComplexMatrix& m) {
    const double a = m.at(0, 0).real();
    const double d = m.at(1, 1).real();
    const double half_gap = 0.5 * std::hypot(a - d, 2.0 * std::abs(m.at(0, 1)));
    const double mid = 0.5 * (a + d);
    return {mid + half_gap, mid - half_gap};
}

void check_density_invariants(const ComplexMatrix& m, int qubit_count) {
    const int dim = dim_for_qubits(qubit_count);
    if (m.dim() != dim) {
        throw std::invalid_argument("density matrix dimension mismatch");
    }
    if (!m.all_finite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (!m.is_hermitian(kStructuralTol)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kStructuralTol) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    std::vector<double> eigs;
    if (dim == 2) {
        const std::array<double, 2> e2 = hermitian2_eigenvalues(m);
        eigs.assign(e2.begin(), e2.end());
    } else {
        eigs = hermitian_eigenvalues(m);
    }
    for (double e : eigs) {
        if (e < kEigenFloor) {
            throw std::invalid_argument("density matrix has a negative eigenvalue");
        }
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        m.at(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int j = 0; j < dim_; j++) {
            r.at(i, j) = std::conj(at(j, i));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; i++) {
        for (int k = 0; k < dim_; k++) {
            const Complex v = at(i, k);
            if (v == Complex{}) {
                continue;
            }
            for (int j = 0; j < dim_; j++) {
                r.at(i, j) += v * rhs.at(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); i++) {
        r.a_[i] = a_[i] + rhs.a_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); i++) {
        r.a_[i] = a_[i] - rhs.a_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::scaled(Complex s) const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); i++) {
        r.a_[i] = a_[i] * s;
    }
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; i++) {
        t += at(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a_.size(); i++) {
        worst = std::max(worst, std::abs(a_[i] - rhs.a_[i]));
    }
    return worst;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const Complex& v : a_) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& v : a_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; i++) {
        for (int j = i; j < dim_; j++) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexMatrix r(da * db);
    for (int i = 0; i < da; i++) {
        for (int j = 0; j < da; j++) {
            const Complex v = a.at(i, j);
            for (int k = 0; k < db; k++) {
                for (int l = 0; l < db; l++) {
                    r.at(i * db + k, j * db + l) = v * b.at(k, l);
                }
            }
        }
    }
    return r;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-8)) {
        throw std::invalid_argument("hermitian_eigenvalues requires a Hermitian matrix");
    }
    const int n = m.dim();
    ComplexMatrix a = m;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (i != j) {
                    s += std::norm(a.at(i, j));
                }
            }
        }
        return std::sqrt(s);
    };

    // Each sweep zeroes every off-diagonal pair once; 4x4 inputs converge in
    // a handful of sweeps.
    for (int sweep = 0; sweep < 100 && off_norm() > kJacobiOffTol; sweep++) {
        for (int p = 0; p < n - 1; p++) {
            for (int q = p + 1; q < n; q++) {
                const Complex apq = a.at(p, q);
                const double mag = std::abs(apq);
                if (mag <= kJacobiOffTol * 0.01) {
                    continue;
                }
                // Unitary plane rotation R with R[p][p]=c, R[p][q]=s*e^{i phi},
                // R[q][p]=-s*e^{-i phi}, R[q][q]=c chosen so (R^dag A R)[p][q]=0,
                // where e^{i phi} is the phase of A[p][q].
                const Complex phase = apq / mag;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                double t;
                if (std::abs(aqq - app) < 1e-300 * mag) {
                    t = 1.0;
                } else {
                    const double tau = (aqq - app) / (2.0 * mag);
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);

                for (int k = 0; k < n; k++) {  // columns: A <- A R
                    const Complex akp = a.at(k, p);
                    const Complex akq = a.at(k, q);
                    a.at(k, p) = c * akp - spc * akq;
                    a.at(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; k++) {  // rows: A <- R^dag A
                    const Complex apk = a.at(p, k);
                    const Complex aqk = a.at(q, k);
                    a.at(p, k) = c * apk - sp * aqk;
                    a.at(q, k) = spc * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (int i = 0; i < n; i++) {
        eigs[static_cast<std::size_t>(i)] = a.at(i, i).real();
    }
    return eigs;
}

PureState::PureState(std::vector<Complex> amplitudes, int qubit_count)
    : amps_(std::move(amplitudes)), qubit_count_(qubit_count) {
    const int dim = dim_for_qubits(qubit_count);
    if (static_cast<int>(amps_.size()) != dim) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    double norm2 = 0.0;
    for (const Complex& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state has non-finite amplitudes");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kStructuralTol) {
        throw std::invalid_argument("state is not normalized");
    }
}

PureState PureState::basis(int qubit_count, int index) {
    const int dim = dim_for_qubits(qubit_count);
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    amps[static_cast<std::size_t>(index)] = 1.0;
    return PureState(std::move(amps), qubit_count);
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m, int qubit_count)
    : m_(std::move(m)), qubit_count_(qubit_count) {
    const int dim = dim_for_qubits(qubit_count);
    if (m_.dim() != dim) {
        throw std::invalid_argument("unitary dimension mismatch");
    }
    if (!m_.all_finite()) {
        throw std::invalid_argument("unitary has non-finite entries");
    }
    if ((m_ * m_.adjoint()).max_abs_diff(ComplexMatrix::identity(dim)) > kStructuralTol) {
        throw std::invalid_argument("matrix is not unitary");
    }
}

UnitaryOperator UnitaryOperator::identity(int qubit_count) {
    return UnitaryOperator(ComplexMatrix::identity(dim_for_qubits(qubit_count)), qubit_count);
}

UnitaryOperator UnitaryOperator::operator*(const UnitaryOperator& rhs) const {
    if (qubit_count_ != rhs.qubit_count_) {
        throw std::invalid_argument("unitary qubit count mismatch");
    }
    return UnitaryOperator(m_ * rhs.m_, qubit_count_);
}

DensityOperator::DensityOperator(ComplexMatrix m, int qubit_count)
    : m_(std::move(m)), qubit_count_(qubit_count) {
    check_density_invariants(m_, qubit_count_);
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
    const int dim = psi.dim();
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            m.at(i, j) = psi.amp(i) * std::conj(psi.amp(j));
        }
    }
    return DensityOperator(std::move(m), psi.qubit_count());
}

DensityOperator DensityOperator::maximally_mixed(int qubit_count) {
    const int dim = dim_for_qubits(qubit_count);
    return DensityOperator(ComplexMatrix::identity(dim).scaled(1.0 / dim), qubit_count);
}

DensityOperator DensityOperator::mixed_with(const DensityOperator& other, double w) const {
    if (qubit_count_ != other.qubit_count_) {
        throw std::invalid_argument("density operator qubit count mismatch");
    }
    if (w < 0.0 || w > 1.0) {
        throw std::invalid_argument("mixing weight outside [0, 1]");
    }
    return DensityOperator(m_.scaled(w) + other.m_.scaled(1.0 - w), qubit_count_);
}

const PauliVector& paulis() {
    static const PauliVector p = [] {
        ComplexMatrix x(2), y(2), z(2);
        x.at(0, 1) = 1.0;
        x.at(1, 0) = 1.0;
        y.at(0, 1) = Complex(0.0, -1.0);
        y.at(1, 0) = Complex(0.0, 1.0);
        z.at(0, 0) = 1.0;
        z.at(1, 1) = -1.0;
        return PauliVector{UnitaryOperator(x, 1), UnitaryOperator(y, 1), UnitaryOperator(z, 1)};
    }();
    return p;
}

const char* bell_outcome_name(BellOutcome o) {
    switch (o) {
        case BellOutcome::PhiPlus:
            return "PhiPlus";
        case BellOutcome::PhiMinus:
            return "PhiMinus";
        case BellOutcome::PsiPlus:
            return "PsiPlus";
        case BellOutcome::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

const PureState& bell_state(BellOutcome o) {
    static const double r = 1.0 / std::sqrt(2.0);
    static const std::array<PureState, 4> states = {
        PureState({r, 0.0, 0.0, r}, 2),
        PureState({r, 0.0, 0.0, -r}, 2),
        PureState({0.0, r, r, 0.0}, 2),
        PureState({0.0, r, -r, 0.0}, 2),
    };
    return states[static_cast<std::size_t>(o)];
}

UnitaryOperator pauli_exponential(const std::array<double, 3>& c, double lambda) {
    for (double v : c) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("pauli_exponential: non-finite axis component");
        }
    }
    if (!std::isfinite(lambda)) {
        throw std::invalid_argument("pauli_exponential: non-finite lambda");
    }
    const double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    ComplexMatrix m(2);
    if (norm == 0.0) {
        m.at(0, 0) = 1.0;
        m.at(1, 1) = 1.0;
        return UnitaryOperator(std::move(m), 1);
    }
    const double theta = lambda * norm;
    const double nx = c[0] / norm;
    const double ny = c[1] / norm;
    const double nz = c[2] / norm;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    // cos(t) I + i sin(t) (n . sigma)
    m.at(0, 0) = Complex(cs, sn * nz);
    m.at(0, 1) = Complex(sn * ny, sn * nx);
    m.at(1, 0) = Complex(-sn * ny, sn * nx);
    m.at(1, 1) = Complex(cs, -sn * nz);
    return UnitaryOperator(std::move(m), 1);
}

PureState tensor_product(const PureState& a, const PureState& b) {
    const int total = a.qubit_count() + b.qubit_count();
    if (total > 2) {
        throw std::invalid_argument("tensor product of states exceeds two qubits");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); i++) {
        for (int j = 0; j < b.dim(); j++) {
            amps[static_cast<std::size_t>(i) * b.dim() + j] = a.amp(i) * b.amp(j);
        }
    }
    return PureState(std::move(amps), total);
}

UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b) {
    const int total = a.qubit_count() + b.qubit_count();
    if (total > 2) {
        throw std::invalid_argument("tensor product of operators exceeds two qubits");
    }
    return UnitaryOperator(kronecker(a.matrix(), b.matrix()), total);
}

PureState apply_unitary(const PureState& state, const UnitaryOperator& u) {
    if (state.qubit_count() != u.qubit_count()) {
        throw std::invalid_argument("operator/state dimension mismatch");
    }
    const int dim = state.dim();
    std::vector<Complex> out(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; i++) {
        Complex acc = 0.0;
        for (int j = 0; j < dim; j++) {
            acc += u.matrix().at(i, j) * state.amp(j);
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return PureState(std::move(out), state.qubit_count());
}

PureState apply_single_qubit(const PureState& state, const UnitaryOperator& u, int target) {
    if (state.qubit_count() != 2) {
        throw std::invalid_argument("apply_single_qubit expects a two-qubit state");
    }
    if (u.qubit_count() != 1) {
        throw std::invalid_argument("apply_single_qubit expects a one-qubit operator");
    }
    if (target != 1 && target != 2) {
        throw std::invalid_argument("target qubit index must be 1 or 2");
    }
    // Qubit 1 owns basis-index bit 1, qubit 2 owns bit 0.
    const int stride = target == 1 ? 2 : 1;
    std::vector<Complex> out(state.amplitudes());
    const ComplexMatrix& m = u.matrix();
    for (int base = 0; base < 4; base++) {
        if ((base & stride) != 0) {
            continue;
        }
        const Complex a0 = state.amp(base);
        const Complex a1 = state.amp(base | stride);
        out[static_cast<std::size_t>(base)] = m.at(0, 0) * a0 + m.at(0, 1) * a1;
        out[static_cast<std::size_t>(base | stride)] = m.at(1, 0) * a0 + m.at(1, 1) * a1;
    }
    return PureState(std::move(out), 2);
}

DensityOperator partial_trace(const DensityOperator& rho, int keep) {
    if (rho.qubit_count() != 2) {
        throw std::invalid_argument("partial_trace expects a two-qubit operator");
    }
    if (keep != 1 && keep != 2) {
        throw std::invalid_argument("keep qubit index must be 1 or 2");
    }
    ComplexMatrix out(2);
    const ComplexMatrix& m = rho.matrix();
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            Complex acc = 0.0;
            for (int k = 0; k < 2; k++) {
                const int row = keep == 1 ? (a << 1) | k : (k << 1) | a;
                const int col = keep == 1 ? (b << 1) | k : (k << 1) | b;
                acc += m.at(row, col);
            }
            out.at(a, b) = acc;
        }
    }
    return DensityOperator(std::move(out), 1);
}

std::array<double, 4> bell_probabilities(const PureState& state) {
    if (state.qubit_count() != 2) {
        throw std::invalid_argument("bell_probabilities expects a two-qubit state");
    }
    std::array<double, 4> probs{};
    for (int k = 0; k < 4; k++) {
        const PureState& b = bell_state(static_cast<BellOutcome>(k));
        Complex overlap = 0.0;
        for (int i = 0; i < 4; i++) {
            overlap += std::conj(b.amp(i)) * state.amp(i);
        }
        probs[static_cast<std::size_t>(k)] = std::norm(overlap);
    }
    return probs;
}

std::pair<BellOutcome, double> measure_bell_basis(const PureState& state, RandomStream& rng) {
    const std::array<double, 4> probs = bell_probabilities(state);
    const double u = rng.uniform01();
    double cum = 0.0;
    int last_nonzero = 0;
    for (int k = 0; k < 4; k++) {
        const double p = probs[static_cast<std::size_t>(k)];
        if (p > 0.0) {
            last_nonzero = k;
        }
        cum += p;
        if (u < cum) {
            return {static_cast<BellOutcome>(k), p};
        }
    }
    // u landed in the rounding sliver past the last cumulative boundary.
    return {static_cast<BellOutcome>(last_nonzero), probs[static_cast<std::size_t>(last_nonzero)]};
}

double von_neumann_entropy(const DensityOperator& rho) {
    if (rho.qubit_count() == 1) {
        const std::array<double, 3> r = bloch_vector(rho);
        const double len = std::min(1.0, std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]));
        return entropy_from_eigenvalues({(1.0 + len) / 2.0, (1.0 - len) / 2.0});
    }
    return entropy_from_eigenvalues(hermitian_eigenvalues(rho.matrix()));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("fidelity dimension mismatch");
    }
    Complex overlap = 0.0;
    for (int i = 0; i < a.dim(); i++) {
        overlap += std::conj(a.amp(i)) * b.amp(i);
    }
    return std::min(1.0, std::norm(overlap));
}

std::array<double, 3> bloch_vector(const DensityOperator& rho) {
    if (rho.qubit_count() != 1) {
        throw std::invalid_argument("bloch_vector expects a one-qubit operator");
    }
    const ComplexMatrix& m = rho.matrix();
    return {
        2.0 * m.at(0, 1).real(),
        -2.0 * m.at(0, 1).imag(),
        m.at(0, 0).real() - m.at(1, 1).real(),
    };
}

}  // namespace qduplex
