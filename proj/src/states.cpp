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

#include "qbroadcast/states.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace qbroadcast {

namespace {

const Dims kThreeQubits{2, 2, 2};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    // A terminating newline does not open a ninth line.
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

double to_double(const std::string &field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(ParseError::Kind::MalformedNumber, fmt::format("cannot convert '{}' to a number", field));
    }
    return value;
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

}  // namespace

ThreeQubitState::ThreeQubitState(StateVector psi) : psi_(std::move(psi)) {
    if (psi_.size() != 8) {
        throw std::invalid_argument(fmt::format("ThreeQubitState: expected 8 amplitudes, got {}", psi_.size()));
    }
    if (!psi_.is_normalized()) {
        throw std::invalid_argument(fmt::format("ThreeQubitState: norm {} is not 1", psi_.norm()));
    }
    if (psi_.dims() != kThreeQubits) {
        psi_ = psi_.with_dims(kThreeQubits);
    }
}

ThreeQubitState ghz() {
    Vector v = Vector::Zero(8);
    v(0) = v(7) = 1.0 / std::sqrt(2.0);
    return ThreeQubitState(StateVector(std::move(v), kThreeQubits));
}

std::size_t basis_index(std::string_view label) {
    if (label.size() != 3) {
        throw ParseError(ParseError::Kind::BadLabel, fmt::format("basis label '{}' must have 3 bits", label));
    }
    std::size_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw ParseError(ParseError::Kind::BadLabel, fmt::format("basis label '{}' must contain only 0/1", label));
        }
        index = 2 * index + static_cast<std::size_t>(c - '0');
    }
    return index;
}

ThreeQubitState basis_state(std::string_view label) {
    return ThreeQubitState(StateVector::basis(kThreeQubits, basis_index(label)));
}

ThreeQubitState parse_state(std::string_view text) {
    static const std::regex kLine(
        R"(^\s*(-?\d+(\.\d+)?([eE][+-]?\d+)?)\s+(-?\d+(\.\d+)?([eE][+-]?\d+)?)\s*$)");

    auto lines = split_lines(text);
    if (lines.size() != 8) {
        throw ParseError(ParseError::Kind::LineCount,
                         fmt::format("expected 8 amplitude lines, got {}", lines.size()));
    }
    Vector v(8);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        std::string line(lines[k]);
        std::smatch m;
        if (!std::regex_match(line, m, kLine)) {
            throw ParseError(ParseError::Kind::MalformedNumber,
                             fmt::format("line {}: expected \"re im\", got '{}'", k + 1, line));
        }
        v(static_cast<Eigen::Index>(k)) = Complex(to_double(m[1].str()), to_double(m[4].str()));
    }
    double norm = v.norm();
    if (!(std::abs(norm - 1.0) <= 1e-6)) {
        throw ParseError(ParseError::Kind::Norm, fmt::format("state norm {} is not within 1e-6 of 1", norm));
    }
    return ThreeQubitState(StateVector(v / norm, kThreeQubits));
}

std::string serialize_state(const ThreeQubitState &state) {
    std::string out;
    for (std::size_t k = 0; k < 8; ++k) {
        auto a = state[k];
        out += shortest(a.real());
        out += ' ';
        out += shortest(a.imag());
        out += '\n';
    }
    return out;
}

ThreeQubitState load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(ParseError::Kind::Io, fmt::format("cannot open state file '{}'", path));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

}  // namespace qbroadcast
