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

#include <string>
#include <string_view>

#include "qbroadcast/tensor_algebra.hpp"

namespace qbroadcast {

/// Normalized pure state of three qubits, dims [2,2,2].
class ThreeQubitState {
  public:
    /// Throws std::invalid_argument unless `psi` has 8 amplitudes with unit norm.
    explicit ThreeQubitState(StateVector psi);

    const StateVector &vector() const { return psi_; }
    Complex operator[](std::size_t i) const { return psi_[i]; }
    DensityMatrix density() const { return DensityMatrix::from_pure(psi_); }

  private:
    StateVector psi_;
};

/// (|000> + |111>) / sqrt(2).
ThreeQubitState ghz();

class ParseError : public std::runtime_error {
  public:
    enum class Kind { Io, LineCount, MalformedNumber, Norm, BadLabel };

    ParseError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// "q1q2q3" -> q1*4 + q2*2 + q3. Label "000" is basis vector phi_1.
std::size_t basis_index(std::string_view label);
ThreeQubitState basis_state(std::string_view label);

// State files hold 8 lines of "re im", line k giving the amplitude of flat
// index k-1. Input within 1e-6 of unit norm is accepted and renormalized.
ThreeQubitState parse_state(std::string_view text);
std::string serialize_state(const ThreeQubitState &state);
ThreeQubitState load_state_file(const std::string &path);

}  // namespace qbroadcast
