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

#ifndef BRAKET_OPERATORS_H
#define BRAKET_OPERATORS_H

#include <span>
#include <utility>
#include <vector>

#include "braket/matrix.h"
#include "braket/spaces.h"

namespace braket {

/// A linear operator between two labeled spaces.
///
/// The matrix is codomain.dim x domain.dim, column j being the image of the
/// domain basis vector e_j, written in the *linear* coordinates of the
/// codomain. For plain spaces that is the ordinary matrix of the operator; for
/// a conjugated codomain the column holds conj() of the image's set
/// coordinates. Application always works on linear coordinates, so operators
/// on H-bar stay linear with respect to its scalar action.
class Operator {
   public:
    Operator(SpaceLabel domain, SpaceLabel codomain, Matrix matrix);
    /// Square or rectangular operator between plain spaces.
    explicit Operator(Matrix matrix);

    static Operator identity(SpaceLabel space);
    static Operator zero(SpaceLabel domain, SpaceLabel codomain);

    const SpaceLabel &domain() const { return domain_; }
    const SpaceLabel &codomain() const { return codomain_; }
    const Matrix &matrix() const { return matrix_; }
    const Complex &operator()(size_t r, size_t c) const { return matrix_(r, c); }

    Operator scaled(Complex alpha) const;
    Operator &operator+=(const Operator &other);
    Operator &operator-=(const Operator &other);
    friend Operator operator+(Operator a, const Operator &b) { return a += b; }
    friend Operator operator-(Operator a, const Operator &b) { return a -= b; }

    friend bool operator==(const Operator &, const Operator &) = default;

   private:
    SpaceLabel domain_;
    SpaceLabel codomain_;
    Matrix matrix_;
};

/// A|x>.
Ket apply(const Operator &a, const Ket &x);

/// A*, characterized by <z|Ax> = <A*z|x>.
Operator adjoint(const Operator &a);

/// The dyad x (x) z = |z><x|, i.e. y -> <x|y> z, on the domain x.space().
///
/// For a plain domain the matrix is z x^dagger. For a conjugated domain
/// <x|y>_{H-bar} = <x,y>_H, which is linear in the linear coordinates of y with
/// coefficients x itself, so the matrix is z x^T.
Operator dyad(const Ket &x, const Ket &z);

/// S o T. Requires T.codomain() == S.domain().
Operator compose(const Operator &s, const Operator &t);

Complex trace(const Operator &a);

/// <z|A, the functional y -> <z|Ay>. Requires z.space() == A.codomain().
Bra bra_compose(const Ket &z, const Operator &a);

/// J_H: x -> <x|*, the map C -> H, lambda -> lambda x.
Operator ket_as_map(const Ket &x);
/// Inverse of ket_as_map: T -> T(1). Requires a one-dimensional domain.
Ket map_as_ket(const Operator &t);

/// sum_i x_i (x) z_i. All x_i share one space, all z_i share one space.
Operator finite_rank_assemble(std::span<const std::pair<Ket, Ket>> pairs);

/// Largest singular value, by power iteration.
double operator_norm(const Operator &a);

}  // namespace braket

#endif
