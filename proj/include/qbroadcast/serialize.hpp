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

#include <nlohmann/json.hpp>

#include "qbroadcast/cloning.hpp"
#include "qbroadcast/entanglement.hpp"

// Structured-text (JSON) encodings. Key order is fixed; decoding accepts
// exactly what encoding produces and throws std::invalid_argument otherwise.

namespace qbroadcast {

using Json = nlohmann::ordered_json;

/// Keys: lambda1 lambda2 lambda3 K12 K13 K23 K123 M12 M13 M23 M123
/// E2_12 E2_13 E2_23 E3 (E values are the unclamped numbers).
Json to_json(const EntanglementReport &report);
EntanglementReport report_from_json(const Json &j);

/// {"dims": [...], "re": [[...]], "im": [[...]]}
Json to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const Json &j);

/// {"dims": [...], "re": [...], "im": [...]}
Json to_json(const StateVector &psi);
StateVector state_from_json(const Json &j);

Json to_json(const BroadcastResult &result);
BroadcastResult broadcast_from_json(const Json &j);

}  // namespace qbroadcast
