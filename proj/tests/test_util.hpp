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
#include <complex>
#include <random>

#include "qbroadcast/states.hpp"
#include "qbroadcast/tensor_algebra.hpp"

// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the code under test except for value types.

namespace qbroadcast::testing {

class Rng {
  public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    double normal() { return dist_(gen_); }
    Complex cnormal() { return {normal(), normal()}; }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> dist_{0.0, 1.0};
};

/// Haar-random normalized vector.
inline Vector random_vector(Rng &rng, std::size_t n) {
    Vector v(static_cast<Eigen::Index>(n));
    for (auto &x : v) {
        x = rng.cnormal();
    }
    return v / v.norm();
}

inline ThreeQubitState random_three_qubit(Rng &rng) {
    return ThreeQubitState(StateVector(random_vector(rng, 8), {2, 2, 2}));
}

/// Ginibre ensemble: G G^dagger / tr, G of shape n x rank.
inline Matrix random_density(Rng &rng, std::size_t n, std::size_t rank) {
    Matrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rank));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = rng.cnormal();
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    // Exact hermiticity.
    return 0.5 * (rho + rho.adjoint());
}

inline DensityMatrix random_three_qubit_density(Rng &rng) {
    return DensityMatrix(random_density(rng, 8, 1 + rng.below(8)), {2, 2, 2});
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
inline Matrix random_unitary(Rng &rng, std::size_t n) {
    Matrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = rng.cnormal();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        auto d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 pauli_literal(int axis) {
    using namespace std::complex_literals;
    switch (axis) {
    case 1:
        return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 2:
        return {{{0.0, -1.0i}, {1.0i, 0.0}}};
    case 3:
        return {{{1.0, 0.0}, {0.0, -1.0}}};
    default:
        return {{{1.0, 0.0}, {0.0, 1.0}}};
    }
}

/// tr(rho (A x B x C)) by explicit index sums over an 8x8 matrix.
inline Complex brute_trace(const Matrix &rho, const Mat2 &a, const Mat2 &b, const Mat2 &c) {
    Complex acc = 0.0;
    for (int r = 0; r < 8; ++r) {
        for (int s = 0; s < 8; ++s) {
            int r1 = (r >> 2) & 1, r2 = (r >> 1) & 1, r3 = r & 1;
            int s1 = (s >> 2) & 1, s2 = (s >> 1) & 1, s3 = s & 1;
            // (rho O)_{rr} summed: rho_{rs} O_{sr}
            acc += rho(r, s) * a[s1][r1] * b[s2][r2] * c[s3][r3];
        }
    }
    return acc;
}

/// Single-qubit clone channel in closed form: shrink the Bloch vector by 2/3.
inline Matrix depolarize_two_thirds(const Matrix &rho2) {
    return (2.0 / 3.0) * rho2 + (1.0 / 3.0) * rho2.trace() * Matrix::Identity(2, 2) / 2.0;
}

/// Closed-form channel applied independently to each qubit of an 8x8 matrix,
/// expanded over matrix units |a><b| of each factor.
inline Matrix depolarize_each_of_three(const Matrix &rho) {
    Matrix out = Matrix::Zero(8, 8);
    std::array<Matrix, 4> images;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            Matrix unit = Matrix::Zero(2, 2);
            unit(a, b) = 1.0;
            images[static_cast<std::size_t>(2 * a + b)] = depolarize_two_thirds(unit);
        }
    }
    for (int r = 0; r < 8; ++r) {
        for (int s = 0; s < 8; ++s) {
            int ra[3] = {(r >> 2) & 1, (r >> 1) & 1, r & 1};
            int sa[3] = {(s >> 2) & 1, (s >> 1) & 1, s & 1};
            const Matrix &e1 = images[static_cast<std::size_t>(2 * ra[0] + sa[0])];
            const Matrix &e2 = images[static_cast<std::size_t>(2 * ra[1] + sa[1])];
            const Matrix &e3 = images[static_cast<std::size_t>(2 * ra[2] + sa[2])];
            for (int x = 0; x < 8; ++x) {
                for (int y = 0; y < 8; ++y) {
                    out(x, y) += rho(r, s) * e1((x >> 2) & 1, (y >> 2) & 1) * e2((x >> 1) & 1, (y >> 1) & 1) *
                                 e3(x & 1, y & 1);
                }
            }
        }
    }
    return out;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qbroadcast::testing
