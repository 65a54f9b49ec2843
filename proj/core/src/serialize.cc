// Copyright 2026 The Braket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "braket/serialize.h"

#include <stdexcept>

namespace braket {

using nlohmann::json;

namespace {

json coords_to_json(std::span<const Complex> coords) {
    json arr = json::array();
    for (const auto &z : coords) {
        arr.push_back(to_json(z));
    }
    return arr;
}

std::vector<Complex> coords_from_json(const json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto &z : j) {
        out.push_back(complex_from_json(z));
    }
    return out;
}

}  // namespace

json to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json to_json(const SpaceLabel &s) {
    return json{{"dim", s.dim()}, {"conj", s.conjugated()}};
}

json to_json(const Ket &k) {
    return json{{"space", to_json(k.space())}, {"coords", coords_to_json(k.coords())}};
}

json to_json(const Operator &a) {
    json rows = json::array();
    const Matrix &m = a.matrix();
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(coords_to_json(m.data().subspan(r * m.cols(), m.cols())));
    }
    return json{{"domain", to_json(a.domain())}, {"codomain", to_json(a.codomain())}, {"rows", rows}};
}

json to_json(const TensorElement &t) {
    return json{{"factors", json::array({t.first_dim(), t.second_dim()})}, {"coords", coords_to_json(t.coords())}};
}

json to_json(const Measurement &m) {
    return json{
        {"outcome", m.outcome},
        {"bits", json::array({m.bits[0], m.bits[1]})},
        {"probabilities", m.probabilities},
        {"bob_raw", to_json(m.bob_raw)},
    };
}

json to_json(const TeleportTrace &trace) {
    return json{
        {"psi0", to_json(trace.psi0)},
        {"psi1", to_json(trace.psi1)},
        {"psi2", to_json(trace.psi2)},
        {"measurement", to_json(trace.measurement)},
        {"bob_corrected", to_json(trace.bob_corrected.ket())},
        {"fidelity", trace.fidelity},
    };
}

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex number as [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

SpaceLabel space_from_json(const json &j) {
    return SpaceLabel(j.at("dim").get<size_t>(), j.at("conj").get<bool>());
}

Ket ket_from_json(const json &j) {
    return Ket(space_from_json(j.at("space")), coords_from_json(j.at("coords")));
}

Operator operator_from_json(const json &j) {
    SpaceLabel domain = space_from_json(j.at("domain"));
    SpaceLabel codomain = space_from_json(j.at("codomain"));
    const json &rows = j.at("rows");
    std::vector<Complex> data;
    for (const auto &row : rows) {
        if (row.size() != domain.dim()) {
            throw std::invalid_argument("operator row has the wrong length");
        }
        for (const auto &z : coords_from_json(row)) {
            data.push_back(z);
        }
    }
    if (rows.size() != codomain.dim()) {
        throw std::invalid_argument("operator has the wrong number of rows");
    }
    return Operator(domain, codomain, Matrix(codomain.dim(), domain.dim(), std::move(data)));
}

TensorElement tensor_from_json(const json &j) {
    const json &f = j.at("factors");
    if (!f.is_array() || f.size() != 2) {
        throw std::invalid_argument("tensor factors must be [m, n]");
    }
    return TensorElement(f[0].get<size_t>(), f[1].get<size_t>(), coords_from_json(j.at("coords")));
}

}  // namespace braket
