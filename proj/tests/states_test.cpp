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

#include <set>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace qbroadcast;
using namespace qbroadcast::testing;

namespace {

ParseError::Kind parse_kind(std::string_view text) {
    try {
        parse_state(text);
    } catch (const ParseError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected a parse error";
    return ParseError::Kind::Io;
}

}  // namespace

TEST(Ghz, amplitudes) {
    auto s = ghz();
    EXPECT_DOUBLE_EQ(s[0].real(), 1.0 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(s[7].real(), 1.0 / std::sqrt(2.0));
    EXPECT_EQ(s[3], Complex(0.0));
    EXPECT_EQ(s.vector().dims(), (Dims{2, 2, 2}));
}

TEST(BasisIndex, labels) {
    EXPECT_EQ(basis_index("000"), 0u);
    EXPECT_EQ(basis_index("111"), 7u);
    EXPECT_EQ(basis_index("010"), 2u);
    EXPECT_THROW(basis_index("01"), ParseError);
    EXPECT_THROW(basis_index("012"), ParseError);
    EXPECT_THROW(basis_index("0a0"), ParseError);
}

TEST(BasisIndex, is_a_bijection) {
    std::set<std::size_t> seen;
    for (int q1 = 0; q1 < 2; ++q1) {
        for (int q2 = 0; q2 < 2; ++q2) {
            for (int q3 = 0; q3 < 2; ++q3) {
                std::string label{char('0' + q1), char('0' + q2), char('0' + q3)};
                seen.insert(basis_index(label));
            }
        }
    }
    EXPECT_EQ(seen.size(), 8u);
    EXPECT_EQ(*seen.rbegin(), 7u);
}

TEST(ParseState, ghz_text) {
    auto s = parse_state(serialize_state(ghz()));
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_LE(std::abs(s[k] - ghz()[k]), 1e-15);
    }
    auto typed = parse_state("0.7071067811865476 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0.7071067811865476 0\n");
    EXPECT_LE((typed.vector().amps() - ghz().vector().amps()).norm(), 1e-15);
}

TEST(ParseState, basis_state_and_whitespace) {
    auto s = parse_state("1 0\n  0 0  \n0\t0\n0 0\n0 0\n0 0\n0 0\n0 0");
    EXPECT_EQ(s[0], Complex(1.0));
    auto crlf = parse_state("1 0\r\n0 0\r\n0 0\r\n0 0\r\n0 0\r\n0 0\r\n0 0\r\n0 0\r\n");
    EXPECT_EQ(crlf[0], Complex(1.0));
}

TEST(ParseState, renormalizes_within_tolerance) {
    auto s = parse_state("1.0000005 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n");
    EXPECT_DOUBLE_EQ(s[0].real(), 1.0);
    EXPECT_EQ(parse_kind("1.00001 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::Norm);
}

TEST(ParseState, distinct_errors) {
    EXPECT_EQ(parse_kind("0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::Norm);
    EXPECT_EQ(parse_kind("1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::LineCount);
    EXPECT_EQ(parse_kind("1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::LineCount);
    EXPECT_EQ(parse_kind("1 x\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
    EXPECT_EQ(parse_kind("1\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
    // The grammar rejects leading '+', bare '.5' and a dangling '1.'.
    EXPECT_EQ(parse_kind("+1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
    EXPECT_EQ(parse_kind(".5 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
    EXPECT_EQ(parse_kind("1. 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
    EXPECT_EQ(parse_kind("1 0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n"), ParseError::Kind::MalformedNumber);
}

TEST(ParseState, line_count_message) {
    try {
        parse_state("1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("expected 8 amplitude lines"), std::string::npos);
    }
}

TEST(ParseState, scientific_notation) {
    auto s = parse_state("7.071067811865476e-01 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 -7.071067811865476E-1\n");
    EXPECT_NEAR(s[7].imag(), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(SerializeState, round_trip_random_states) {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_three_qubit(rng);
        auto back = parse_state(serialize_state(s));
        for (std::size_t k = 0; k < 8; ++k) {
            EXPECT_LE(std::abs(back[k] - s[k]), 1e-15);
        }
    }
}

TEST(LoadStateFile, missing_file_is_io_error) {
    try {
        load_state_file("/nonexistent/state.txt");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.kind(), ParseError::Kind::Io);
    }
    auto s = load_state_file(std::string(QBROADCAST_FIXTURES) + "/ghz.txt");
    EXPECT_LE((s.vector().amps() - ghz().vector().amps()).norm(), 1e-15);
}

TEST(ThreeQubitState, requires_normalized_eight_vectors) {
    EXPECT_THROW(ThreeQubitState(StateVector(Vector::Zero(8), {2, 2, 2})), std::invalid_argument);
    EXPECT_THROW(ThreeQubitState(StateVector::basis({4}, 0)), std::invalid_argument);
    EXPECT_EQ(ThreeQubitState(StateVector::basis({8}, 5)).vector().dims(), (Dims{2, 2, 2}));
}
