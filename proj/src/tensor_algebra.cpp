// Copyright 2026 The qbroadcast Authors
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

#include "qbroadcast/tensor_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace qbroadcast {

namespace {

Dims concat(const Dims &a, const Dims &b) {
    Dims out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

/// Place value of each subsystem in the flat index.
std::vector<std::size_t> strides_of(const Dims &dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        strides[k - 1] = strides[k] * dims[k];
    }
    return strides;
}

/// Flat offsets contributed by the listed subsystems, enumerated in row-major
/// order over their own dimensions.
std::vector<std::size_t> offsets_of(const Dims &dims, const std::vector<std::size_t> &strides,
                                    std::span<const std::size_t> subsystems) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t s : subsystems) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * dims[s]);
        for (std::size_t base : offsets) {
            for (std::size_t d = 0; d < dims[s]; ++d) {
                next.push_back(base + d * strides[s]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

struct TraceLayout {
    Dims kept_dims;
    std::vector<std::size_t> kept_offsets;
    std::vector<std::size_t> traced_offsets;
};

TraceLayout trace_layout(const Dims &dims, std::span<const std::size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.size()) {
            throw std::invalid_argument(
                fmt::format("partial_trace: subsystem {} out of range for {} subsystems", keep[i], dims.size()));
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw std::invalid_argument(
                fmt::format("partial_trace: keep set {} must be strictly increasing", fmt::join(keep, ",")));
        }
    }
    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (!std::binary_search(keep.begin(), keep.end(), s)) {
            traced.push_back(s);
        }
    }
    TraceLayout layout;
    auto strides = strides_of(dims);
    for (std::size_t s : keep) {
        layout.kept_dims.push_back(dims[s]);
    }
    layout.kept_offsets = offsets_of(dims, strides, keep);
    layout.traced_offsets = offsets_of(dims, strides, traced);
    return layout;
}

/// index_map[out] = in for the permutation convention out[k] = in[perm[k]].
std::pair<Dims, std::vector<std::size_t>> permutation_map(const Dims &dims, std::span<const std::size_t> perm) {
    if (perm.size() != dims.size()) {
        throw std::invalid_argument(
            fmt::format("permute_subsystems: permutation of length {} for {} subsystems", perm.size(), dims.size()));
    }
    std::vector<bool> seen(dims.size(), false);
    for (std::size_t p : perm) {
        if (p >= dims.size() || seen[p]) {
            throw std::invalid_argument(
                fmt::format("permute_subsystems: [{}] is not a permutation", fmt::join(perm, ",")));
        }
        seen[p] = true;
    }
    Dims out_dims(dims.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out_dims[k] = dims[perm[k]];
    }
    // Enumerating the input strides in output order yields the map directly.
    auto in_strides = strides_of(dims);
    std::vector<std::size_t> ordered(perm.begin(), perm.end());
    return {out_dims, offsets_of(dims, in_strides, ordered)};
}

}  // namespace

std::size_t product(const Dims &dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Vector amps, Dims dims) : amps_(std::move(amps)), dims_(std::move(dims)) {
    if (dims_.empty() || product(dims_) != size()) {
        throw std::invalid_argument(
            fmt::format("StateVector: length {} does not match dims [{}]", size(), fmt::join(dims_, ",")));
    }
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::with_dims(Dims new_dims) const {
    return StateVector(amps_, std::move(new_dims));
}

StateVector StateVector::basis(const Dims &dims, std::size_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(product(dims)));
    if (index >= static_cast<std::size_t>(v.size())) {
        throw std::invalid_argument(fmt::format("StateVector::basis: index {} out of range", index));
    }
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v), dims);
}

// ---------------------------------------------------------------------------
// DensityMatrix

std::string DensityCheck::describe() const {
    return fmt::format("hermiticity error {:.3e}, trace error {:.3e}, min eigenvalue {:.3e}", hermiticity_error,
                       trace_error, min_eigenvalue);
}

DensityMatrix::DensityMatrix(Matrix mat, Dims dims) : mat_(std::move(mat)), dims_(std::move(dims)) {
    if (mat_.rows() != mat_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix is not square");
    }
    if (dims_.empty() || product(dims_) != size()) {
        throw std::invalid_argument(
            fmt::format("DensityMatrix: size {} does not match dims [{}]", size(), fmt::join(dims_, ",")));
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    return DensityMatrix(psi.amps() * psi.amps().adjoint(), psi.dims());
}

DensityMatrix DensityMatrix::maximally_mixed(const Dims &dims) {
    auto n = static_cast<Eigen::Index>(product(dims));
    return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n), dims);
}

DensityCheck DensityMatrix::check() const {
    DensityCheck c;
    c.hermiticity_error = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    c.trace_error = std::abs(mat_.trace() - 1.0);
    Matrix herm = 0.5 * (mat_ + mat_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    c.min_eigenvalue = solver.eigenvalues().minCoeff();
    return c;
}

const DensityMatrix &DensityMatrix::validate() const {
    auto c = check();
    if (!c.ok()) {
        throw NumericalError("invalid density matrix: " + c.describe());
    }
    return *this;
}

DensityMatrix DensityMatrix::with_dims(Dims new_dims) const {
    return DensityMatrix(mat_, std::move(new_dims));
}

// ---------------------------------------------------------------------------
// Isometry

Isometry::Isometry(Matrix mat, Dims out_dims) : mat_(std::move(mat)), out_dims_(std::move(out_dims)) {
    if (out_dims_.empty() || product(out_dims_) != output_dim()) {
        throw std::invalid_argument(
            fmt::format("Isometry: {} rows do not match out dims [{}]", output_dim(), fmt::join(out_dims_, ",")));
    }
    if (input_dim() == 0 || input_dim() > output_dim()) {
        throw std::invalid_argument("Isometry: input dimension must be in 1..rows");
    }
}

double Isometry::orthonormality_error() const {
    auto n = mat_.cols();
    return (mat_.adjoint() * mat_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Operations

Matrix pauli(int axis) {
    using namespace std::complex_literals;
    Matrix m(2, 2);
    switch (axis) {
    case 1:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case 2:
        m << 0.0, -1.0i, 1.0i, 0.0;
        break;
    case 3:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    default:
        throw std::invalid_argument(fmt::format("pauli: axis {} not in {{1,2,3}}", axis));
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    return StateVector(kron(Matrix(a.amps()), Matrix(b.amps())).col(0), concat(a.dims(), b.dims()));
}

DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(kron(a.mat(), b.mat()), concat(a.dims(), b.dims()));
}

Isometry kron(const Isometry &a, const Isometry &b) {
    return Isometry(kron(a.mat(), b.mat()), concat(a.out_dims(), b.out_dims()));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    auto layout = trace_layout(rho.dims(), keep);
    auto n = static_cast<Eigen::Index>(layout.kept_offsets.size());
    Matrix out = Matrix::Zero(n, n);
    const Matrix &m = rho.mat();
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            Complex acc = 0.0;
            for (std::size_t t : layout.traced_offsets) {
                acc += m(static_cast<Eigen::Index>(layout.kept_offsets[r] + t),
                         static_cast<Eigen::Index>(layout.kept_offsets[c] + t));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(out), std::move(layout.kept_dims));
}

DensityMatrix partial_trace(const StateVector &psi, std::span<const std::size_t> keep) {
    auto layout = trace_layout(psi.dims(), keep);
    auto n = static_cast<Eigen::Index>(layout.kept_offsets.size());
    auto t = static_cast<Eigen::Index>(layout.traced_offsets.size());
    // Reshape into kept x traced, then rho = A A^dagger.
    Matrix a(n, t);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index s = 0; s < t; ++s) {
            a(r, s) = psi.amps()(static_cast<Eigen::Index>(layout.kept_offsets[r] + layout.traced_offsets[s]));
        }
    }
    return DensityMatrix(a * a.adjoint(), std::move(layout.kept_dims));
}

StateVector permute_subsystems(const StateVector &psi, std::span<const std::size_t> perm) {
    auto [out_dims, map] = permutation_map(psi.dims(), perm);
    Vector out(psi.amps().size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = psi[map[i]];
    }
    return StateVector(std::move(out), std::move(out_dims));
}

DensityMatrix permute_subsystems(const DensityMatrix &rho, std::span<const std::size_t> perm) {
    auto [out_dims, map] = permutation_map(rho.dims(), perm);
    auto n = static_cast<Eigen::Index>(map.size());
    Matrix out(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            out(r, c) = rho(map[r], map[c]);
        }
    }
    return DensityMatrix(std::move(out), std::move(out_dims));
}

StateVector apply_isometry(const Isometry &v, const StateVector &psi) {
    if (v.input_dim() != psi.size()) {
        throw std::invalid_argument(
            fmt::format("apply_isometry: isometry input dim {} vs state length {}", v.input_dim(), psi.size()));
    }
    return StateVector(v.mat() * psi.amps(), v.out_dims());
}

double fidelity(const StateVector &psi, const DensityMatrix &rho) {
    if (psi.size() != rho.size()) {
        throw std::invalid_argument(
            fmt::format("fidelity: state length {} vs density matrix size {}", psi.size(), rho.size()));
    }
    Complex f = psi.amps().dot(rho.mat() * psi.amps());  // dot() conjugates the first argument
    if (std::abs(f.imag()) > 1e-12) {
        throw NumericalError(fmt::format("fidelity: imaginary residue {:.3e}", f.imag()));
    }
    return f.real();
}

}  // namespace qbroadcast
