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

#include "braket/hilbert_schmidt.h"

#include <cmath>

#include "braket/errors.h"

namespace braket {

Complex hs_inner(const Operator &s, const Operator &t) {
    require_same_space(s.domain(), t.domain(), "hs_inner (domain)");
    require_same_space(s.codomain(), t.codomain(), "hs_inner (codomain)");
    return trace(compose(s, adjoint(t)));
}

double hs_norm(const Operator &t) {
    return std::sqrt(std::max(0.0, hs_inner(t, t).real()));
}

Matrix hs_coefficients(const Operator &r) {
    size_t m = r.domain().dim();
    size_t n = r.codomain().dim();
    Matrix lambda(m, n);
    for (size_t i = 0; i < m; i++) {
        Ket image = apply(r, Ket::basis(r.domain(), i));
        for (size_t j = 0; j < n; j++) {
            lambda(i, j) = inner_math(image, Ket::basis(r.codomain(), j));
        }
    }
    return lambda;
}

Operator hs_reconstruct(const Matrix &lambda, SpaceLabel domain, SpaceLabel codomain) {
    if (lambda.rows() != domain.dim() || lambda.cols() != codomain.dim()) {
        throw SpaceMismatchError("hs_reconstruct: coefficient array does not match " + domain.str() + " -> " +
                                 codomain.str());
    }
    Operator sum = Operator::zero(domain, codomain);
    for (size_t i = 0; i < domain.dim(); i++) {
        for (size_t j = 0; j < codomain.dim(); j++) {
            if (lambda(i, j) != Complex{}) {
                sum += dyad(Ket::basis(domain, i), Ket::basis(codomain, j)).scaled(lambda(i, j));
            }
        }
    }
    return sum;
}

double weak_l2_norm(std::span<const Ket> family) {
    if (family.empty()) {
        return 0;
    }
    const SpaceLabel &space = family.front().space();
    Matrix rows(family.size(), space.dim());
    for (size_t i = 0; i < family.size(); i++) {
        require_same_space(space, family[i].space(), "weak_l2_norm");
        std::vector<Complex> lin = family[i].linear_coords();
        for (size_t k = 0; k < lin.size(); k++) {
            rows(i, k) = std::conj(lin[k]);
        }
    }
    return largest_singular_value(rows);
}

TwoSummingCheck two_summing_check(const Operator &t, std::span<const Ket> family) {
    double sum_sq = 0;
    for (const auto &x : family) {
        double n = norm(apply(t, x));
        sum_sq += n * n;
    }
    TwoSummingCheck out{};
    out.lhs = std::sqrt(sum_sq);
    out.rhs = hs_norm(t) * weak_l2_norm(family);
    out.ok = out.lhs <= out.rhs + 1e-9;
    return out;
}

}  // namespace braket
