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

#include "braket/spaces.h"

#include <cmath>
#include <stdexcept>

#include "braket/errors.h"

namespace braket {

SpaceLabel::SpaceLabel(size_t dim, bool conjugated) : dim_(dim), conjugated_(conjugated) {
    if (dim == 0) {
        throw std::invalid_argument("SpaceLabel: dimension must be at least 1");
    }
}

std::string SpaceLabel::str() const {
    return std::string(conjugated_ ? "conj(C^" : "C^") + std::to_string(dim_) + (conjugated_ ? ")" : "");
}

Ket::Ket(SpaceLabel space, std::vector<Complex> coords) : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) {
        throw SpaceMismatchError(
            "Ket: " + std::to_string(coords_.size()) + " coordinates for space " + space_.str());
    }
}

Ket::Ket(std::vector<Complex> coords) : space_(coords.size()), coords_(std::move(coords)) {
}

Ket Ket::zero(SpaceLabel space) {
    return Ket(space, std::vector<Complex>(space.dim()));
}

Ket Ket::basis(SpaceLabel space, size_t index) {
    if (index >= space.dim()) {
        throw std::out_of_range("Ket::basis: index " + std::to_string(index) + " out of range for " + space.str());
    }
    std::vector<Complex> c(space.dim());
    c[index] = 1;
    return Ket(space, std::move(c));
}

Ket Ket::from_linear_coords(SpaceLabel space, std::span<const Complex> linear) {
    std::vector<Complex> c(linear.begin(), linear.end());
    if (space.conjugated()) {
        for (auto &z : c) {
            z = std::conj(z);
        }
    }
    return Ket(space, std::move(c));
}

std::vector<Complex> Ket::linear_coords() const {
    std::vector<Complex> c = coords_;
    if (space_.conjugated()) {
        for (auto &z : c) {
            z = std::conj(z);
        }
    }
    return c;
}

Ket Ket::reinterpret_in_conjugate() const {
    return Ket(space_.conjugate(), coords_);
}

Ket Ket::scaled(Complex alpha) const {
    Ket out = *this;
    for (auto &z : out.coords_) {
        z *= alpha;
    }
    return out;
}

Ket &Ket::operator+=(const Ket &other) {
    require_same_space(space_, other.space_, "Ket addition");
    for (size_t k = 0; k < coords_.size(); k++) {
        coords_[k] += other.coords_[k];
    }
    return *this;
}

Ket &Ket::operator-=(const Ket &other) {
    require_same_space(space_, other.space_, "Ket subtraction");
    for (size_t k = 0; k < coords_.size(); k++) {
        coords_[k] -= other.coords_[k];
    }
    return *this;
}

Bra::Bra(SpaceLabel space, std::vector<Complex> coords) : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) {
        throw SpaceMismatchError(
            "Bra: " + std::to_string(coords_.size()) + " coordinates for space " + space_.str());
    }
}

Complex Bra::operator()(const Ket &y) const {
    require_same_space(space_, y.space(), "Bra application");
    std::vector<Complex> lin = y.linear_coords();
    Complex s = 0;
    for (size_t k = 0; k < coords_.size(); k++) {
        s += std::conj(coords_[k]) * lin[k];
    }
    return s;
}

double Bra::operator_norm() const {
    std::vector<Complex> row(coords_.size());
    for (size_t k = 0; k < coords_.size(); k++) {
        row[k] = std::conj(coords_[k]);
    }
    return largest_singular_value(Matrix::row(row));
}

void require_same_space(const SpaceLabel &a, const SpaceLabel &b, const char *context) {
    if (a != b) {
        throw SpaceMismatchError(std::string(context) + ": " + a.str() + " vs " + b.str());
    }
}

Complex inner_math(const Ket &x, const Ket &y) {
    require_same_space(x.space(), y.space(), "inner_math");
    Complex s = 0;
    for (size_t k = 0; k < x.dim(); k++) {
        s += x[k] * std::conj(y[k]);
    }
    return x.space().conjugated() ? std::conj(s) : s;
}

Complex inner_phys(const Ket &x, const Ket &y) {
    return std::conj(inner_math(x, y));
}

Ket conjugate_scalar_mul(Complex lambda, const Ket &x) {
    if (!x.space().conjugated()) {
        throw ConventionError("conjugate_scalar_mul: ket lives in the plain space " + x.space().str());
    }
    return x.scaled(std::conj(lambda));
}

Ket conjugation_map(const Ket &x) {
    std::vector<Complex> c(x.coords().begin(), x.coords().end());
    for (auto &z : c) {
        z = std::conj(z);
    }
    return Ket(x.space().conjugate(), std::move(c));
}

Bra riesz_bra(const Ket &x) {
    return Bra(x.space(), x.linear_coords());
}

Ket riesz_inverse(const Bra &b) {
    return Ket::from_linear_coords(b.space(), b.coords());
}

double norm(const Ket &x) {
    return euclidean_norm(x.coords());
}

}  // namespace braket
