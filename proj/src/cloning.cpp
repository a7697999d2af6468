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

#include "qbroadcast/cloning.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace qbroadcast {

namespace {

const Dims kSixQubits{2, 2, 2, 2, 2, 2};

BroadcastResult finish(BroadcastMode mode, const ThreeQubitState &psi, DensityMatrix six) {
    six.validate();
    auto originals = extract_clone(six, CloneSide::Originals);
    auto copies = extract_clone(six, CloneSide::Copies);
    originals.validate();
    copies.validate();
    auto report_originals = full_report(originals);
    auto report_copies = full_report(copies);
    double f_orig = fidelity(psi.vector(), originals);
    double f_copy = fidelity(psi.vector(), copies);
    return BroadcastResult{mode,
                           psi.vector(),
                           std::move(six),
                           std::move(originals),
                           std::move(copies),
                           std::move(report_originals),
                           std::move(report_copies),
                           f_orig,
                           f_copy};
}

}  // namespace

std::string_view to_string(BroadcastMode mode) {
    return mode == BroadcastMode::Local ? "local" : "nonlocal";
}

Isometry local_cloner_isometry() {
    const double a = std::sqrt(2.0 / 3.0);
    const double b = std::sqrt(1.0 / 6.0);  // sqrt(1/3) times the 1/sqrt(2) of |+>
    // row = original*4 + copy*2 + machine
    Matrix v = Matrix::Zero(8, 2);
    v(0b000, 0) = a;
    v(0b101, 0) = b;
    v(0b011, 0) = b;
    v(0b111, 1) = a;
    v(0b100, 1) = b;
    v(0b010, 1) = b;
    return Isometry(std::move(v), {2, 2, 2});
}

Isometry nonlocal_cloner_isometry(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument(fmt::format("nonlocal_cloner_isometry: N = {} < 2", n));
    }
    const double nd = static_cast<double>(n);
    const double c = std::sqrt(2.0 / (nd + 1.0));
    const double d = std::sqrt(1.0 / (2.0 * (nd + 1.0)));
    auto row = [n](std::size_t orig, std::size_t copy, std::size_t machine) {
        return static_cast<Eigen::Index>((orig * n + copy) * n + machine);
    };
    auto cols = static_cast<Eigen::Index>(n);
    Matrix v = Matrix::Zero(cols * cols * cols, cols);
    for (std::size_t i = 0; i < n; ++i) {
        auto col = static_cast<Eigen::Index>(i);
        v(row(i, i, i), col) = c;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                v(row(i, j, j), col) = d;
                v(row(j, i, j), col) = d;
            }
        }
    }
    return Isometry(std::move(v), {n, n, n});
}

CloneChannel::CloneChannel(const Isometry &cloner) : dim_(cloner.input_dim()) {
    const auto &od = cloner.out_dims();
    if (od.size() != 3 || od[0] != dim_ || od[1] != dim_) {
        throw std::invalid_argument("CloneChannel: cloner out dims must be [d, d, machine]");
    }
    auto d = static_cast<Eigen::Index>(dim_);
    super_ = Matrix::Zero(d * d, d * d);
    const std::array<std::size_t, 1> keep{0};
    // Column (a,b) is the image of the matrix unit |a><b|.
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            Matrix out = cloner.mat().col(a) * cloner.mat().col(b).adjoint();
            auto reduced = partial_trace(DensityMatrix(std::move(out), od), keep);
            for (Eigen::Index r = 0; r < d; ++r) {
                for (Eigen::Index c = 0; c < d; ++c) {
                    super_(r * d + c, a * d + b) = reduced(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                }
            }
        }
    }
}

Matrix CloneChannel::apply(const Matrix &rho) const {
    auto d = static_cast<Eigen::Index>(dim_);
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument("CloneChannel::apply: dimension mismatch");
    }
    Vector vec(d * d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            vec(r * d + c) = rho(r, c);
        }
    }
    Vector image = super_ * vec;
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            out(r, c) = image(r * d + c);
        }
    }
    return out;
}

DensityMatrix CloneChannel::apply_product(const DensityMatrix &rho, std::size_t factors) const {
    if (rho.dims() != Dims(factors, dim_)) {
        throw std::invalid_argument("CloneChannel::apply_product: dims do not match the channel");
    }
    // Act on one factor at a time: for factor f, rows/cols split as
    // (high, digit, low) and the channel mixes the (row digit, col digit) pair.
    const std::size_t d = dim_;
    const std::size_t total = rho.size();
    Matrix cur = rho.mat();
    std::size_t low = total;
    for (std::size_t f = 0; f < factors; ++f) {
        low /= d;
        const std::size_t high = total / (low * d);
        Matrix next = Matrix::Zero(cur.rows(), cur.cols());
        for (std::size_t hr = 0; hr < high; ++hr) {
            for (std::size_t lr = 0; lr < low; ++lr) {
                for (std::size_t hc = 0; hc < high; ++hc) {
                    for (std::size_t lc = 0; lc < low; ++lc) {
                        for (std::size_t a = 0; a < d; ++a) {
                            for (std::size_t b = 0; b < d; ++b) {
                                Complex x = cur(static_cast<Eigen::Index>((hr * d + a) * low + lr),
                                                static_cast<Eigen::Index>((hc * d + b) * low + lc));
                                if (x == Complex(0.0)) {
                                    continue;
                                }
                                for (std::size_t r = 0; r < d; ++r) {
                                    for (std::size_t c = 0; c < d; ++c) {
                                        next(static_cast<Eigen::Index>((hr * d + r) * low + lr),
                                             static_cast<Eigen::Index>((hc * d + c) * low + lc)) +=
                                            super_(static_cast<Eigen::Index>(r * d + c),
                                                   static_cast<Eigen::Index>(a * d + b)) *
                                            x;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return DensityMatrix(std::move(cur), rho.dims());
}

BroadcastResult broadcast_local(const ThreeQubitState &psi) {
    auto v = local_cloner_isometry();
    // Output order (1_0, 1_1, x_1, 2_0, 2_1, x_2, 3_0, 3_1, x_3).
    auto all = kron(kron(v, v), v);
    auto out = apply_isometry(all, psi.vector());
    if (!out.is_normalized()) {
        throw NumericalError(fmt::format("local broadcast output has norm {}", out.norm()));
    }
    // Dropping the machines leaves the canonical clone order.
    const std::array<std::size_t, 6> keep{0, 1, 3, 4, 6, 7};
    return finish(BroadcastMode::Local, psi, partial_trace(out, keep));
}

BroadcastResult broadcast_nonlocal(const ThreeQubitState &psi) {
    auto v = nonlocal_cloner_isometry(8);
    auto out = apply_isometry(v, psi.vector().with_dims({8}));
    if (!out.is_normalized()) {
        throw NumericalError(fmt::format("nonlocal broadcast output has norm {}", out.norm()));
    }
    const std::array<std::size_t, 2> keep{0, 1};
    // (1_0 2_0 3_0)(1_1 2_1 3_1) regrouped to (1_0, 1_1, 2_0, 2_1, 3_0, 3_1)
    auto pair = partial_trace(out, keep).with_dims(kSixQubits);
    const std::array<std::size_t, 6> perm{0, 3, 1, 4, 2, 5};
    return finish(BroadcastMode::Nonlocal, psi, permute_subsystems(pair, perm));
}

BroadcastResult broadcast(BroadcastMode mode, const ThreeQubitState &psi) {
    return mode == BroadcastMode::Local ? broadcast_local(psi) : broadcast_nonlocal(psi);
}

DensityMatrix extract_clone(const DensityMatrix &rho6, CloneSide which) {
    if (rho6.dims() != kSixQubits) {
        throw std::invalid_argument("extract_clone: expected a six-qubit density matrix");
    }
    static constexpr std::array<std::size_t, 3> kOriginals{0, 2, 4};
    static constexpr std::array<std::size_t, 3> kCopies{1, 3, 5};
    return partial_trace(rho6, which == CloneSide::Originals ? kOriginals : kCopies);
}

}  // namespace qbroadcast
