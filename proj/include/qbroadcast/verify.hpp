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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbroadcast/serialize.hpp"

// Reproduction table: every published number next to the simulated value and,
// where one exists, an independently computed oracle value.
//
//   PASS  simulated agrees with the published value
//   FLAG  simulated disagrees with the published value but agrees with the oracle
//   FAIL  anything else

namespace qbroadcast {

enum class RowStatus { Pass, Flag, Fail };

std::string_view to_string(RowStatus status);
RowStatus row_status_from_string(std::string_view text);

struct Fraction {
    long num;
    long den;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string text() const;
};

struct VerifyRow {
    std::string family;    // e.g. "GHZ", "local clone"
    std::string quantity;  // e.g. "E3", "rho[000,111]"
    Fraction published;
    double simulated;
    std::optional<double> oracle;
    std::string oracle_source;
    RowStatus status;

    double delta() const;
};

struct VerifySummary {
    double tolerance;
    std::vector<VerifyRow> rows;

    bool ok() const;  // no FAIL rows
    std::size_t count(RowStatus s) const;
};

RowStatus classify(double published, double simulated, std::optional<double> oracle, double tolerance);

/// <psi| P1 x P2 x P3 |psi> by acting with single-qubit Paulis on the
/// amplitudes; axis entries 0 (identity) or 1..3.
double pauli_expectation(const StateVector &psi, const std::array<int, 3> &axes);

VerifySummary run_verification(double tolerance = 1e-9);

Json to_json(const VerifySummary &summary);
VerifySummary verify_from_json(const Json &j);

}  // namespace qbroadcast
