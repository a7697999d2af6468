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

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qbroadcast/tensor_algebra.hpp"

// Pauli-basis description of a three-qubit density matrix
//
//   rho = 1/8 [ 1 + sum_m lambda(m).sigma at slot m
//                 + sum_{m<n} K_ij(m,n) sigma_i at m, sigma_j at n
//                 + K_ijk sigma_i x sigma_j x sigma_k ]
//
// together with the connected ("M") tensors obtained by removing every
// factorized contribution, and the scalar measures built from them:
//
//   E3      = 1/4 sum_ijk M_ijk^2
//   E2(m,n) = 1/3 sum_ij  M_ij(m,n)^2
//
// Qubit labels m, n are 1-based. Tensor axes are 0-based in storage
// (0 = x, 1 = y, 2 = z).

namespace qbroadcast {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Ordered qubit pair, 1 <= first < second <= 3.
struct QubitPair {
    int first;
    int second;

    /// Throws std::invalid_argument unless 1 <= m < n <= 3.
    static QubitPair of(int m, int n);
    std::string label() const;  // "12", "13", "23"
};

inline constexpr std::array<QubitPair, 3> kPairs{{{1, 2}, {1, 3}, {2, 3}}};

/// Dense real 3x3x3 array.
class Tensor3 {
  public:
    Tensor3() { data_.fill(0.0); }

    double &operator()(int i, int j, int k) { return data_[static_cast<std::size_t>(9 * i + 3 * j + k)]; }
    double operator()(int i, int j, int k) const { return data_[static_cast<std::size_t>(9 * i + 3 * j + k)]; }

    double squared_norm() const;
    double max_abs() const;

  private:
    std::array<double, 27> data_;
};

struct CoherenceVector {
    int qubit;
    Vector3 v;
};

struct CorrelationTensor2 {
    QubitPair pair;
    Matrix3 k;
};

struct CorrelationTensor3 {
    Tensor3 k;
};

/// An E value with its range check; `raw` is never altered.
struct Measure {
    double raw = 0.0;

    double clamped() const;
    bool in_range(double tol = 1e-9) const { return raw >= -tol && raw <= 1.0 + tol; }
};

struct EntanglementReport {
    std::array<Vector3, 3> lambda;  // lambda[m-1]
    std::array<Matrix3, 3> k2;      // indexed like kPairs: 12, 13, 23
    Tensor3 k3;
    std::array<Matrix3, 3> m2;
    Tensor3 m3;
    std::array<Measure, 3> e2;
    Measure e3;

    /// Either order; (n,m) gives the transpose of (m,n).
    Matrix3 m_pair(int m, int n) const;
    Matrix3 k_pair(int m, int n) const;
    Measure e2_pair(int m, int n) const;

    /// Human-readable range violations beyond tol, empty when all is well.
    std::vector<std::string> violations(double tol = 1e-9) const;
};

std::size_t pair_slot(QubitPair pair);

CoherenceVector coherence_vector(const DensityMatrix &rho, int m);
CorrelationTensor2 correlation_tensor2(const DensityMatrix &rho, int m, int n);
CorrelationTensor3 correlation_tensor3(const DensityMatrix &rho);
Matrix3 m_tensor2(const DensityMatrix &rho, int m, int n);
Tensor3 m_tensor3(const DensityMatrix &rho);
Measure e3(const DensityMatrix &rho);
Measure e2(const DensityMatrix &rho, int m, int n);
EntanglementReport full_report(const DensityMatrix &rho);

/// Rebuilds the 8x8 operator from coherence vectors and correlation tensors.
Matrix pauli_expand(const std::array<Vector3, 3> &lambda, const std::array<Matrix3, 3> &k2, const Tensor3 &k3);

}  // namespace qbroadcast
