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

#include "qbroadcast/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace qbroadcast {

namespace {

constexpr double kImagTolerance = 1e-12;

void require_three_qubits(const DensityMatrix &rho) {
    if (rho.dims() != Dims{2, 2, 2}) {
        throw std::invalid_argument("entanglement measures need a density matrix with dims [2,2,2]");
    }
}

void require_qubit(int m) {
    if (m < 1 || m > 3) {
        throw std::invalid_argument(fmt::format("qubit label {} not in 1..3", m));
    }
}

/// Entry 0 means identity at that slot, 1..3 select a Pauli axis.
Matrix slot_operator(const std::array<int, 3> &axes) {
    Matrix op = Matrix::Identity(1, 1);
    for (int a : axes) {
        op = kron(op, a == 0 ? Matrix(Matrix::Identity(2, 2)) : pauli(a));
    }
    return op;
}

double expectation(const DensityMatrix &rho, const std::array<int, 3> &axes) {
    // tr(rho O) = sum_ab rho_ab O_ba
    Complex t = (rho.mat().array() * slot_operator(axes).transpose().array()).sum();
    if (std::abs(t.imag()) > kImagTolerance) {
        throw NumericalError(fmt::format("Pauli expectation has imaginary residue {:.3e}", t.imag()));
    }
    return t.real();
}

Matrix3 connected(const Matrix3 &k, const Vector3 &a, const Vector3 &b) {
    return k - a * b.transpose();
}

Tensor3 connected3(const Tensor3 &k, const std::array<Vector3, 3> &lambda, const Matrix3 &m12, const Matrix3 &m13,
                   const Matrix3 &m23) {
    Tensor3 out;
    const auto &l1 = lambda[0];
    const auto &l2 = lambda[1];
    const auto &l3 = lambda[2];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int q = 0; q < 3; ++q) {
                out(i, j, q) = k(i, j, q) - l1(i) * m23(j, q) - l2(j) * m13(i, q) - l3(q) * m12(i, j) -
                               l1(i) * l2(j) * l3(q);
            }
        }
    }
    return out;
}

}  // namespace

QubitPair QubitPair::of(int m, int n) {
    require_qubit(m);
    require_qubit(n);
    if (m >= n) {
        throw std::invalid_argument(fmt::format("qubit pair ({},{}) must satisfy m < n", m, n));
    }
    return {m, n};
}

std::string QubitPair::label() const {
    return fmt::format("{}{}", first, second);
}

std::size_t pair_slot(QubitPair pair) {
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        if (kPairs[s].first == pair.first && kPairs[s].second == pair.second) {
            return s;
        }
    }
    throw std::invalid_argument(fmt::format("invalid qubit pair ({},{})", pair.first, pair.second));
}

double Tensor3::squared_norm() const {
    double s = 0.0;
    for (double x : data_) {
        s += x * x;
    }
    return s;
}

double Tensor3::max_abs() const {
    double s = 0.0;
    for (double x : data_) {
        s = std::max(s, std::abs(x));
    }
    return s;
}

double Measure::clamped() const {
    return std::clamp(raw, 0.0, 1.0);
}

Matrix3 EntanglementReport::m_pair(int m, int n) const {
    if (m > n) {
        return m_pair(n, m).transpose();
    }
    return m2[pair_slot(QubitPair::of(m, n))];
}

Matrix3 EntanglementReport::k_pair(int m, int n) const {
    if (m > n) {
        return k_pair(n, m).transpose();
    }
    return k2[pair_slot(QubitPair::of(m, n))];
}

Measure EntanglementReport::e2_pair(int m, int n) const {
    return m > n ? e2_pair(n, m) : e2[pair_slot(QubitPair::of(m, n))];
}

std::vector<std::string> EntanglementReport::violations(double tol) const {
    std::vector<std::string> out;
    if (!e3.in_range(tol)) {
        out.push_back(fmt::format("E3 = {:.12g} outside [0,1]", e3.raw));
    }
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        if (!e2[s].in_range(tol)) {
            out.push_back(fmt::format("E2({},{}) = {:.12g} outside [0,1]", kPairs[s].first, kPairs[s].second,
                                      e2[s].raw));
        }
    }
    return out;
}

CoherenceVector coherence_vector(const DensityMatrix &rho, int m) {
    require_three_qubits(rho);
    require_qubit(m);
    CoherenceVector out{m, Vector3::Zero()};
    for (int i = 1; i <= 3; ++i) {
        std::array<int, 3> axes{0, 0, 0};
        axes[static_cast<std::size_t>(m - 1)] = i;
        out.v(i - 1) = expectation(rho, axes);
    }
    return out;
}

CorrelationTensor2 correlation_tensor2(const DensityMatrix &rho, int m, int n) {
    require_three_qubits(rho);
    auto pair = QubitPair::of(m, n);
    CorrelationTensor2 out{pair, Matrix3::Zero()};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            std::array<int, 3> axes{0, 0, 0};
            axes[static_cast<std::size_t>(m - 1)] = i;
            axes[static_cast<std::size_t>(n - 1)] = j;
            out.k(i - 1, j - 1) = expectation(rho, axes);
        }
    }
    return out;
}

CorrelationTensor3 correlation_tensor3(const DensityMatrix &rho) {
    require_three_qubits(rho);
    CorrelationTensor3 out;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            for (int k = 1; k <= 3; ++k) {
                out.k(i - 1, j - 1, k - 1) = expectation(rho, {i, j, k});
            }
        }
    }
    return out;
}

Matrix3 m_tensor2(const DensityMatrix &rho, int m, int n) {
    auto k = correlation_tensor2(rho, m, n);
    return connected(k.k, coherence_vector(rho, m).v, coherence_vector(rho, n).v);
}

Tensor3 m_tensor3(const DensityMatrix &rho) {
    std::array<Vector3, 3> lambda;
    for (int m = 1; m <= 3; ++m) {
        lambda[static_cast<std::size_t>(m - 1)] = coherence_vector(rho, m).v;
    }
    return connected3(correlation_tensor3(rho).k, lambda, m_tensor2(rho, 1, 2), m_tensor2(rho, 1, 3),
                      m_tensor2(rho, 2, 3));
}

Measure e3(const DensityMatrix &rho) {
    return {0.25 * m_tensor3(rho).squared_norm()};
}

Measure e2(const DensityMatrix &rho, int m, int n) {
    return {m_tensor2(rho, m, n).squaredNorm() / 3.0};
}

EntanglementReport full_report(const DensityMatrix &rho) {
    require_three_qubits(rho);
    EntanglementReport r;
    for (int m = 1; m <= 3; ++m) {
        r.lambda[static_cast<std::size_t>(m - 1)] = coherence_vector(rho, m).v;
    }
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        auto [m, n] = kPairs[s];
        r.k2[s] = correlation_tensor2(rho, m, n).k;
        r.m2[s] = connected(r.k2[s], r.lambda[static_cast<std::size_t>(m - 1)],
                            r.lambda[static_cast<std::size_t>(n - 1)]);
        r.e2[s] = {r.m2[s].squaredNorm() / 3.0};
    }
    r.k3 = correlation_tensor3(rho).k;
    r.m3 = connected3(r.k3, r.lambda, r.m2[0], r.m2[1], r.m2[2]);
    r.e3 = {0.25 * r.m3.squared_norm()};
    return r;
}

Matrix pauli_expand(const std::array<Vector3, 3> &lambda, const std::array<Matrix3, 3> &k2, const Tensor3 &k3) {
    Matrix rho = slot_operator({0, 0, 0});
    for (int m = 1; m <= 3; ++m) {
        for (int i = 1; i <= 3; ++i) {
            std::array<int, 3> axes{0, 0, 0};
            axes[static_cast<std::size_t>(m - 1)] = i;
            rho += lambda[static_cast<std::size_t>(m - 1)](i - 1) * slot_operator(axes);
        }
    }
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        auto [m, n] = kPairs[s];
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                std::array<int, 3> axes{0, 0, 0};
                axes[static_cast<std::size_t>(m - 1)] = i;
                axes[static_cast<std::size_t>(n - 1)] = j;
                rho += k2[s](i - 1, j - 1) * slot_operator(axes);
            }
        }
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            for (int k = 1; k <= 3; ++k) {
                rho += k3(i - 1, j - 1, k - 1) * slot_operator({i, j, k});
            }
        }
    }
    return rho / 8.0;
}

}  // namespace qbroadcast
