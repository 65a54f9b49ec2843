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

#ifndef BRAKET_HILBERT_SCHMIDT_H
#define BRAKET_HILBERT_SCHMIDT_H

#include <span>

#include "braket/matrix.h"
#include "braket/operators.h"
#include "braket/spaces.h"

namespace braket {

/// <S,T>_{S2} = tr(S T*). Linear in S, conjugate-linear in T.
Complex hs_inner(const Operator &s, const Operator &t);

/// sigma_2(T) = sqrt(tr(T T*)), the Frobenius norm of the matrix.
double hs_norm(const Operator &t);

/// lambda(i, j) = <R e_i, f_j> for e_i in the domain and f_j in the codomain
/// standard bases. Returned as a domain.dim x codomain.dim array.
Matrix hs_coefficients(const Operator &r);

/// sum_ij lambda(i, j) e_i (x) f_j over the given spaces.
Operator hs_reconstruct(const Matrix &lambda, SpaceLabel domain, SpaceLabel codomain);

/// sup over the unit ball of (sum_i |<x_i, a>|^2)^{1/2}: the largest singular
/// value of the matrix whose rows are the x_i. Zero for an empty family.
double weak_l2_norm(std::span<const Ket> family);

struct TwoSummingCheck {
    /// (sum_i ||T x_i||^2)^{1/2}
    double lhs;
    /// sigma_2(T) * weak_l2_norm(family)
    double rhs;
    bool ok;
};

/// The absolutely 2-summing inequality with constant sigma_2(T).
/// ok <=> lhs <= rhs + 1e-9.
TwoSummingCheck two_summing_check(const Operator &t, std::span<const Ket> family);

}  // namespace braket

#endif
