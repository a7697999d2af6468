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

#include <string_view>

#include "qbroadcast/entanglement.hpp"
#include "qbroadcast/states.hpp"
#include "qbroadcast/tensor_algebra.hpp"

namespace qbroadcast {

enum class BroadcastMode { Local, Nonlocal };
enum class CloneSide { Originals, Copies };

std::string_view to_string(BroadcastMode mode);

struct BroadcastResult {
    BroadcastMode mode;
    StateVector input;
    DensityMatrix six_qubit;  // dims [2]*6, order (1_0, 1_1, 2_0, 2_1, 3_0, 3_1)
    DensityMatrix originals;  // (1_0, 2_0, 3_0)
    DensityMatrix copies;     // (1_1, 2_1, 3_1)
    EntanglementReport report_originals;
    EntanglementReport report_copies;
    double fidelity_originals;
    double fidelity_copies;
};

/// Universal qubit cloner restricted to its input qubit. Output subsystems are
/// (original, copy, machine); machine |up> is index 0, |down> index 1.
///
///   |0> -> sqrt(2/3) |00>|up>   + sqrt(1/3) |+>|down>
///   |1> -> sqrt(2/3) |11>|down> + sqrt(1/3) |+>|up>
///
/// with |+> = (|10> + |01>)/sqrt(2).
Isometry local_cloner_isometry();

/// N-dimensional cloner; output subsystems (original, copy, machine), each of
/// dimension N, machine state X_j at index j.
///
///   |i> -> c |i>|i>|X_i> + d sum_{j != i} (|i>|j> + |j>|i>) |X_j>
///
/// with c^2 = 2/(N+1), d^2 = 1/(2(N+1)).
Isometry nonlocal_cloner_isometry(std::size_t n);

/// Reduced map on the original slot of a cloner with out dims [d, d, m],
/// stored as a d^2 x d^2 superoperator acting on row-major vec(rho).
class CloneChannel {
  public:
    explicit CloneChannel(const Isometry &cloner);

    std::size_t dim() const { return dim_; }
    const Matrix &superoperator() const { return super_; }

    Matrix apply(const Matrix &rho) const;
    /// The channel applied independently to each of `factors` subsystems.
    DensityMatrix apply_product(const DensityMatrix &rho, std::size_t factors) const;

  private:
    std::size_t dim_;
    Matrix super_;
};

BroadcastResult broadcast_local(const ThreeQubitState &psi);
BroadcastResult broadcast_nonlocal(const ThreeQubitState &psi);
BroadcastResult broadcast(BroadcastMode mode, const ThreeQubitState &psi);

DensityMatrix extract_clone(const DensityMatrix &rho6, CloneSide which);

}  // namespace qbroadcast
