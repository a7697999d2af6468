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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbroadcast/cloning.hpp"
#include "qbroadcast/entanglement.hpp"
#include "qbroadcast/verify.hpp"

namespace qbroadcast::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Analyze, Broadcast, Verify };
enum class OutputFormat { Table, Text };

struct RunConfig {
    Command command = Command::Verify;
    std::optional<BroadcastMode> mode;      // broadcast only
    std::optional<std::string> state_path;  // unset means the built-in GHZ state
    OutputFormat format = OutputFormat::Table;
    double tolerance = 1e-9;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses argv (without running anything). Throws UsageError. Returns nullopt
/// when help was requested and already printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out);

int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_args + run with exit-code mapping; what main() calls.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Rendering helpers, exposed for tests.

/// 12 significant digits; magnitudes below 1e-14 print as 0.
std::string format_number(double x);
/// Best p/q with q <= max_den if it matches x within tol.
std::optional<Fraction> recognize_fraction(double x, long max_den = 1000, double tol = 1e-9);
/// format_number(x) plus " (p/q)" when x is a recognizable non-integer fraction.
std::string annotated(double x);

void render_report(const EntanglementReport &report, std::ostream &out);
void render_broadcast(const BroadcastResult &result, std::ostream &out);
void render_verify(const VerifySummary &summary, std::ostream &out);

}  // namespace qbroadcast::cli
