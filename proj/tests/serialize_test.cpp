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

#include "qbroadcast/serialize.hpp"

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace qbroadcast;
using namespace qbroadcast::testing;

namespace {

void expect_same(const EntanglementReport &a, const EntanglementReport &b) {
    for (std::size_t s = 0; s < 3; ++s) {
        EXPECT_EQ(a.lambda[s], b.lambda[s]);
        EXPECT_EQ(a.k2[s], b.k2[s]);
        EXPECT_EQ(a.m2[s], b.m2[s]);
        EXPECT_EQ(a.e2[s].raw, b.e2[s].raw);
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                EXPECT_EQ(a.k3(i, j, k), b.k3(i, j, k));
                EXPECT_EQ(a.m3(i, j, k), b.m3(i, j, k));
            }
        }
    }
    EXPECT_EQ(a.e3.raw, b.e3.raw);
}

}  // namespace

TEST(ReportJson, stable_key_order) {
    auto j = to_json(full_report(ghz().density()));
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"lambda1", "lambda2", "lambda3", "K12", "K13", "K23", "K123", "M12",
                                              "M13", "M23", "M123", "E2_12", "E2_13", "E2_23", "E3"}));
    EXPECT_EQ(j["K123"].size(), 3u);
    EXPECT_EQ(j["K123"][0][0].size(), 3u);
}

TEST(ReportJson, round_trip_through_text) {
    Rng rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        auto report = full_report(random_three_qubit_density(rng));
        auto text = to_json(report).dump(2);
        expect_same(report, report_from_json(Json::parse(text)));
    }
}

TEST(ReportJson, rejects_malformed_documents) {
    auto j = to_json(full_report(ghz().density()));
    auto missing = j;
    missing.erase("E3");
    EXPECT_THROW(report_from_json(missing), std::invalid_argument);
    auto short_vec = j;
    short_vec["lambda1"] = Json::array({0.0, 0.0});
    EXPECT_THROW(report_from_json(short_vec), std::invalid_argument);
    auto wrong_type = j;
    wrong_type["E3"] = "one";
    EXPECT_THROW(report_from_json(wrong_type), std::invalid_argument);
}

TEST(BroadcastJson, round_trip_through_text) {
    Rng rng(83);
    for (auto mode : {BroadcastMode::Local, BroadcastMode::Nonlocal}) {
        auto r = broadcast(mode, random_three_qubit(rng));
        auto back = broadcast_from_json(Json::parse(to_json(r).dump()));
        EXPECT_EQ(back.mode, mode);
        EXPECT_EQ(back.input.amps(), r.input.amps());
        EXPECT_EQ(back.six_qubit.mat(), r.six_qubit.mat());
        EXPECT_EQ(back.six_qubit.dims(), r.six_qubit.dims());
        EXPECT_EQ(back.originals.mat(), r.originals.mat());
        EXPECT_EQ(back.copies.mat(), r.copies.mat());
        expect_same(back.report_originals, r.report_originals);
        expect_same(back.report_copies, r.report_copies);
        EXPECT_EQ(back.fidelity_originals, r.fidelity_originals);
        EXPECT_EQ(back.fidelity_copies, r.fidelity_copies);
    }
}

TEST(BroadcastJson, rejects_unknown_mode) {
    auto j = to_json(broadcast_local(ghz()));
    j["mode"] = "teleport";
    EXPECT_THROW(broadcast_from_json(j), std::invalid_argument);
}
