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

#include "braket/operators.h"

#include <stdexcept>
#include <string>

#include "braket/errors.h"

namespace braket {

Operator::Operator(SpaceLabel domain, SpaceLabel codomain, Matrix matrix)
    : domain_(domain), codomain_(codomain), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
        throw SpaceMismatchError(
            "Operator: matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
            " but maps " + domain_.str() + " -> " + codomain_.str());
    }
}

Operator::Operator(Matrix matrix)
    : Operator(SpaceLabel(matrix.cols()), SpaceLabel(matrix.rows()), std::move(matrix)) {
}

Operator Operator::identity(SpaceLabel space) {
    return Operator(space, space, Matrix::identity(space.dim()));
}

Operator Operator::zero(SpaceLabel domain, SpaceLabel codomain) {
    return Operator(domain, codomain, Matrix::zeros(codomain.dim(), domain.dim()));
}

Operator Operator::scaled(Complex alpha) const {
    return Operator(domain_, codomain_, matrix_ * alpha);
}

Operator &Operator::operator+=(const Operator &other) {
    require_same_space(domain_, other.domain_, "Operator addition (domain)");
    require_same_space(codomain_, other.codomain_, "Operator addition (codomain)");
    matrix_ += other.matrix_;
    return *this;
}

Operator &Operator::operator-=(const Operator &other) {
    require_same_space(domain_, other.domain_, "Operator subtraction (domain)");
    require_same_space(codomain_, other.codomain_, "Operator subtraction (codomain)");
    matrix_ -= other.matrix_;
    return *this;
}

Ket apply(const Operator &a, const Ket &x) {
    require_same_space(a.domain(), x.space(), "apply");
    std::vector<Complex> lin = multiply(a.matrix(), x.linear_coords());
    return Ket::from_linear_coords(a.codomain(), lin);
}

Operator adjoint(const Operator &a) {
    return Operator(a.codomain(), a.domain(), a.matrix().adjoint());
}

Operator dyad(const Ket &x, const Ket &z) {
    std::vector<Complex> functional(x.coords().begin(), x.coords().end());
    if (!x.space().conjugated()) {
        for (auto &c : functional) {
            c = std::conj(c);
        }
    }
    std::vector<Complex> image = z.linear_coords();
    Matrix m(z.dim(), x.dim());
    for (size_t r = 0; r < z.dim(); r++) {
        for (size_t c = 0; c < x.dim(); c++) {
            m(r, c) = image[r] * functional[c];
        }
    }
    return Operator(x.space(), z.space(), std::move(m));
}

Operator compose(const Operator &s, const Operator &t) {
    require_same_space(t.codomain(), s.domain(), "compose");
    return Operator(t.domain(), s.codomain(), s.matrix() * t.matrix());
}

Complex trace(const Operator &a) {
    if (a.domain() != a.codomain()) {
        throw SpaceMismatchError("trace: operator maps " + a.domain().str() + " -> " + a.codomain().str());
    }
    return a.matrix().trace();
}

Bra bra_compose(const Ket &z, const Operator &a) {
    require_same_space(a.codomain(), z.space(), "bra_compose");
    // Row vector z^dagger M, then stored conjugated as a Bra.
    std::vector<Complex> zl = z.linear_coords();
    const Matrix &m = a.matrix();
    std::vector<Complex> coords(m.cols());
    for (size_t c = 0; c < m.cols(); c++) {
        Complex s = 0;
        for (size_t r = 0; r < m.rows(); r++) {
            s += std::conj(zl[r]) * m(r, c);
        }
        coords[c] = std::conj(s);
    }
    return Bra(a.domain(), std::move(coords));
}

Operator ket_as_map(const Ket &x) {
    return Operator(SpaceLabel(1), x.space(), Matrix::column(x.linear_coords()));
}

Ket map_as_ket(const Operator &t) {
    if (t.domain().dim() != 1) {
        throw SpaceMismatchError("map_as_ket: domain must be one-dimensional, got " + t.domain().str());
    }
    return apply(t, Ket(t.domain(), {1.0}));
}

Operator finite_rank_assemble(std::span<const std::pair<Ket, Ket>> pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("finite_rank_assemble: no pairs given");
    }
    Operator sum = Operator::zero(pairs.front().first.space(), pairs.front().second.space());
    for (const auto &[x, z] : pairs) {
        sum += dyad(x, z);
    }
    return sum;
}

double operator_norm(const Operator &a) {
    return largest_singular_value(a.matrix());
}

}  // namespace braket
