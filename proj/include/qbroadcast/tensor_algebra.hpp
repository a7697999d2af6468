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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qbroadcast {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered list of subsystem dimensions. Subsystem 0 is the most significant
/// digit of the flat basis index.
using Dims = std::vector<std::size_t>;

/// Raised when a computed object breaks a physical invariant (trace,
/// hermiticity, positivity, measure range, ...).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

std::size_t product(const Dims &dims);

class StateVector {
  public:
    StateVector(Vector amps, Dims dims);

    const Vector &amps() const { return amps_; }
    const Dims &dims() const { return dims_; }
    std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }
    Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

    double norm() const { return amps_.norm(); }
    bool is_normalized(double tol = kNormTolerance) const;

    /// Same amplitudes, dims regrouped. product(new_dims) must equal size().
    StateVector with_dims(Dims new_dims) const;

    /// Computational basis vector |index> over `dims`.
    static StateVector basis(const Dims &dims, std::size_t index);

  private:
    Vector amps_;
    Dims dims_;
};

/// Outcome of the density-matrix invariant checks.
struct DensityCheck {
    double hermiticity_error = 0.0;  // max |rho - rho^dagger|
    double trace_error = 0.0;        // |tr rho - 1|
    double min_eigenvalue = 0.0;

    bool ok() const {
        return hermiticity_error <= kHermiticityTolerance && trace_error <= kTraceTolerance &&
               min_eigenvalue >= kEigenvalueFloor;
    }
    std::string describe() const;
};

class DensityMatrix {
  public:
    /// Only shape is checked here; call validate() for the physical invariants.
    DensityMatrix(Matrix mat, Dims dims);

    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(const Dims &dims);

    const Matrix &mat() const { return mat_; }
    const Dims &dims() const { return dims_; }
    std::size_t size() const { return static_cast<std::size_t>(mat_.rows()); }
    Complex operator()(std::size_t r, std::size_t c) const {
        return mat_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    DensityCheck check() const;
    /// Throws NumericalError if check() fails.
    const DensityMatrix &validate() const;

    DensityMatrix with_dims(Dims new_dims) const;

  private:
    Matrix mat_;
    Dims dims_;
};

/// Linear map with orthonormal columns, defined on the physical input space
/// only. rows = product(out_dims), cols = input dimension.
class Isometry {
  public:
    Isometry(Matrix mat, Dims out_dims);

    const Matrix &mat() const { return mat_; }
    const Dims &out_dims() const { return out_dims_; }
    std::size_t input_dim() const { return static_cast<std::size_t>(mat_.cols()); }
    std::size_t output_dim() const { return static_cast<std::size_t>(mat_.rows()); }

    /// max |V^dagger V - I|
    double orthonormality_error() const;

  private:
    Matrix mat_;
    Dims out_dims_;
};

/// Pauli matrix for axis 1 (x), 2 (y) or 3 (z).
Matrix pauli(int axis);

Matrix kron(const Matrix &a, const Matrix &b);
StateVector kron(const StateVector &a, const StateVector &b);
DensityMatrix kron(const DensityMatrix &a, const DensityMatrix &b);
/// Parallel composition; output subsystems are a's followed by b's.
Isometry kron(const Isometry &a, const Isometry &b);

/// Reduced state over `keep` (0-based, strictly increasing), in original order.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);
/// Reduced state of |psi><psi| without forming the full projector.
DensityMatrix partial_trace(const StateVector &psi, std::span<const std::size_t> keep);

/// Output subsystem k is input subsystem perm[k] (0-based).
StateVector permute_subsystems(const StateVector &psi, std::span<const std::size_t> perm);
DensityMatrix permute_subsystems(const DensityMatrix &rho, std::span<const std::size_t> perm);

StateVector apply_isometry(const Isometry &v, const StateVector &psi);

/// <psi|rho|psi>. Throws NumericalError on an imaginary residue above 1e-12.
double fidelity(const StateVector &psi, const DensityMatrix &rho);

}  // namespace qbroadcast
