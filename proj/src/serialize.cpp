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

#include <fmt/format.h>

namespace qbroadcast {

namespace {

Json vec3_json(const Vector3 &v) {
    return Json::array({v(0), v(1), v(2)});
}

Json mat3_json(const Matrix3 &m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    }
    return rows;
}

Json tensor3_json(const Tensor3 &t) {
    Json out = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json plane = Json::array();
        for (int j = 0; j < 3; ++j) {
            plane.push_back(Json::array({t(i, j, 0), t(i, j, 1), t(i, j, 2)}));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

void require_size(const Json &j, std::size_t n, const char *what) {
    if (!j.is_array() || j.size() != n) {
        throw std::invalid_argument(fmt::format("{}: expected an array of {} entries", what, n));
    }
}

Vector3 vec3_from(const Json &j) {
    require_size(j, 3, "vector");
    return Vector3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Matrix3 mat3_from(const Json &j) {
    require_size(j, 3, "3x3 matrix");
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        auto row = vec3_from(j[static_cast<std::size_t>(i)]);
        m.row(i) = row.transpose();
    }
    return m;
}

Tensor3 tensor3_from(const Json &j) {
    require_size(j, 3, "3x3x3 tensor");
    Tensor3 t;
    for (int i = 0; i < 3; ++i) {
        auto plane = mat3_from(j[static_cast<std::size_t>(i)]);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                t(i, a, b) = plane(a, b);
            }
        }
    }
    return t;
}

Dims dims_from(const Json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("dims must be an array");
    }
    return j.get<Dims>();
}

template <typename F>
auto decoding(const char *what, F &&f) {
    try {
        return f();
    } catch (const Json::exception &e) {
        throw std::invalid_argument(fmt::format("malformed {}: {}", what, e.what()));
    }
}

}  // namespace

Json to_json(const EntanglementReport &r) {
    Json j;
    j["lambda1"] = vec3_json(r.lambda[0]);
    j["lambda2"] = vec3_json(r.lambda[1]);
    j["lambda3"] = vec3_json(r.lambda[2]);
    j["K12"] = mat3_json(r.k2[0]);
    j["K13"] = mat3_json(r.k2[1]);
    j["K23"] = mat3_json(r.k2[2]);
    j["K123"] = tensor3_json(r.k3);
    j["M12"] = mat3_json(r.m2[0]);
    j["M13"] = mat3_json(r.m2[1]);
    j["M23"] = mat3_json(r.m2[2]);
    j["M123"] = tensor3_json(r.m3);
    j["E2_12"] = r.e2[0].raw;
    j["E2_13"] = r.e2[1].raw;
    j["E2_23"] = r.e2[2].raw;
    j["E3"] = r.e3.raw;
    return j;
}

EntanglementReport report_from_json(const Json &j) {
    return decoding("entanglement report", [&] {
        EntanglementReport r;
        r.lambda = {vec3_from(j.at("lambda1")), vec3_from(j.at("lambda2")), vec3_from(j.at("lambda3"))};
        r.k2 = {mat3_from(j.at("K12")), mat3_from(j.at("K13")), mat3_from(j.at("K23"))};
        r.k3 = tensor3_from(j.at("K123"));
        r.m2 = {mat3_from(j.at("M12")), mat3_from(j.at("M13")), mat3_from(j.at("M23"))};
        r.m3 = tensor3_from(j.at("M123"));
        r.e2 = {Measure{j.at("E2_12").get<double>()}, Measure{j.at("E2_13").get<double>()},
                Measure{j.at("E2_23").get<double>()}};
        r.e3 = Measure{j.at("E3").get<double>()};
        return r;
    });
}

Json to_json(const DensityMatrix &rho) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < rho.size(); ++r) {
        Json row_re = Json::array();
        Json row_im = Json::array();
        for (std::size_t c = 0; c < rho.size(); ++c) {
            row_re.push_back(rho(r, c).real());
            row_im.push_back(rho(r, c).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    Json j;
    j["dims"] = rho.dims();
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

DensityMatrix density_from_json(const Json &j) {
    return decoding("density matrix", [&] {
        auto dims = dims_from(j.at("dims"));
        const auto &re = j.at("re");
        const auto &im = j.at("im");
        auto n = product(dims);
        require_size(re, n, "density matrix real part");
        require_size(im, n, "density matrix imaginary part");
        Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r) {
            require_size(re[r], n, "density matrix row");
            require_size(im[r], n, "density matrix row");
            for (std::size_t c = 0; c < n; ++c) {
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    Complex(re[r][c].get<double>(), im[r][c].get<double>());
            }
        }
        return DensityMatrix(std::move(m), std::move(dims));
    });
}

Json to_json(const StateVector &psi) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        re.push_back(psi[i].real());
        im.push_back(psi[i].imag());
    }
    Json j;
    j["dims"] = psi.dims();
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

StateVector state_from_json(const Json &j) {
    return decoding("state vector", [&] {
        auto dims = dims_from(j.at("dims"));
        auto n = product(dims);
        require_size(j.at("re"), n, "state real part");
        require_size(j.at("im"), n, "state imaginary part");
        Vector v(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            v(static_cast<Eigen::Index>(i)) = Complex(j["re"][i].get<double>(), j["im"][i].get<double>());
        }
        return StateVector(std::move(v), std::move(dims));
    });
}

Json to_json(const BroadcastResult &b) {
    Json j;
    j["mode"] = std::string(to_string(b.mode));
    j["input"] = to_json(b.input);
    j["six_qubit"] = to_json(b.six_qubit);
    j["originals"] = to_json(b.originals);
    j["copies"] = to_json(b.copies);
    j["report_originals"] = to_json(b.report_originals);
    j["report_copies"] = to_json(b.report_copies);
    j["fidelity_originals"] = b.fidelity_originals;
    j["fidelity_copies"] = b.fidelity_copies;
    return j;
}

BroadcastResult broadcast_from_json(const Json &j) {
    return decoding("broadcast result", [&] {
        auto mode_name = j.at("mode").get<std::string>();
        BroadcastMode mode;
        if (mode_name == "local") {
            mode = BroadcastMode::Local;
        } else if (mode_name == "nonlocal") {
            mode = BroadcastMode::Nonlocal;
        } else {
            throw std::invalid_argument(fmt::format("unknown broadcast mode '{}'", mode_name));
        }
        return BroadcastResult{mode,
                               state_from_json(j.at("input")),
                               density_from_json(j.at("six_qubit")),
                               density_from_json(j.at("originals")),
                               density_from_json(j.at("copies")),
                               report_from_json(j.at("report_originals")),
                               report_from_json(j.at("report_copies")),
                               j.at("fidelity_originals").get<double>(),
                               j.at("fidelity_copies").get<double>()};
    });
}

}  // namespace qbroadcast
