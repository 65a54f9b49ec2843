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

#include "braket/tensor.h"

#include <stdexcept>
#include <string>

#include "braket/errors.h"

namespace braket {

namespace {

void require_plain(const Ket &x, const char *context) {
    if (x.space().conjugated()) {
        throw ConventionError(std::string(context) + ": tensor factors must be plain spaces, got " +
                              x.space().str());
    }
}

}  // namespace

TensorElement::TensorElement(size_t first_dim, size_t second_dim, std::vector<Complex> coords)
    : first_dim_(first_dim), second_dim_(second_dim), coords_(std::move(coords)) {
    if (first_dim_ == 0 || second_dim_ == 0) {
        throw std::invalid_argument("TensorElement: factor dimensions must be at least 1");
    }
    if (coords_.size() != first_dim_ * second_dim_) {
        throw SpaceMismatchError("TensorElement: " + std::to_string(coords_.size()) + " coordinates for " +
                                 std::to_string(first_dim_) + " x " + std::to_string(second_dim_));
    }
}

double TensorElement::sigma() const {
    return euclidean_norm(coords_);
}

Ket TensorElement::as_ket() const {
    return Ket(SpaceLabel(coords_.size()), coords_);
}

TensorElement TensorElement::from_ket(const Ket &flat, size_t first_dim) {
    require_plain(flat, "TensorElement::from_ket");
    if (first_dim == 0 || flat.dim() % first_dim != 0) {
        throw SpaceMismatchError("TensorElement::from_ket: " + std::to_string(flat.dim()) +
                                 " is not divisible by " + std::to_string(first_dim));
    }
    return TensorElement(first_dim, flat.dim() / first_dim, {flat.coords().begin(), flat.coords().end()});
}

TensorElement TensorElement::regroup(size_t first_dim) const {
    if (first_dim == 0 || coords_.size() % first_dim != 0) {
        throw SpaceMismatchError("TensorElement::regroup: " + std::to_string(coords_.size()) +
                                 " is not divisible by " + std::to_string(first_dim));
    }
    return TensorElement(first_dim, coords_.size() / first_dim, coords_);
}

TensorElement kron(const Ket &x, const Ket &y) {
    require_plain(x, "kron");
    require_plain(y, "kron");
    size_t m = x.dim();
    size_t n = y.dim();
    std::vector<Complex> out(m * n);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            out[i * n + j] = x[i] * y[j];
        }
    }
    return TensorElement(m, n, std::move(out));
}

Operator kron_op(const Operator &a, const Operator &b) {
    if (a.domain().conjugated() || b.domain().conjugated() || a.codomain().conjugated() ||
        b.codomain().conjugated()) {
        throw ConventionError("kron_op: operators between plain spaces only");
    }
    const Matrix &ma = a.matrix();
    const Matrix &mb = b.matrix();
    Matrix out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (size_t i = 0; i < ma.rows(); i++) {
        for (size_t j = 0; j < ma.cols(); j++) {
            Complex s = ma(i, j);
            if (s == Complex{}) {
                continue;
            }
            for (size_t k = 0; k < mb.rows(); k++) {
                for (size_t l = 0; l < mb.cols(); l++) {
                    out(i * mb.rows() + k, j * mb.cols() + l) = s * mb(k, l);
                }
            }
        }
    }
    return Operator(std::move(out));
}

TensorElement apply(const Operator &a, const TensorElement &t) {
    return TensorElement::from_ket(apply(a, t.as_ket()), t.first_dim());
}

TensorElement vec(const Operator &a) {
    const Matrix &m = a.matrix();
    std::vector<Complex> out(m.rows() * m.cols());
    for (size_t c = 0; c < m.cols(); c++) {
        for (size_t r = 0; r < m.rows(); r++) {
            out[c * m.rows() + r] = m(r, c);
        }
    }
    return TensorElement(m.cols(), m.rows(), std::move(out));
}

Operator unvec(const TensorElement &t, SpaceLabel domain, SpaceLabel codomain) {
    if (domain.dim() != t.first_dim() || codomain.dim() != t.second_dim()) {
        throw SpaceMismatchError("unvec: tensor of shape " + std::to_string(t.first_dim()) + " x " +
                                 std::to_string(t.second_dim()) + " cannot become an operator " + domain.str() +
                                 " -> " + codomain.str());
    }
    size_t rows = codomain.dim();
    Matrix m(rows, domain.dim());
    for (size_t c = 0; c < domain.dim(); c++) {
        for (size_t r = 0; r < rows; r++) {
            m(r, c) = t[c * rows + r];
        }
    }
    return Operator(domain, codomain, std::move(m));
}

Operator commutation_matrix(size_t m, size_t n) {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("commutation_matrix: dimensions must be at least 1");
    }
    SpaceLabel cm(m);
    SpaceLabel cn(n);
    Operator k = Operator::zero(SpaceLabel(m * n), SpaceLabel(m * n));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            // e_i e_j^T is m x n, e_j e_i^T is n x m.
            k += kron_op(dyad(Ket::basis(cn, j), Ket::basis(cm, i)), dyad(Ket::basis(cm, i), Ket::basis(cn, j)));
        }
    }
    return k;
}

Operator tensor_to_hs(const TensorElement &t) {
    return unvec(t, SpaceLabel::conj(t.first_dim()), SpaceLabel::plain(t.second_dim()));
}

TensorElement hs_to_tensor(const Operator &op) {
    if (!op.domain().conjugated()) {
        throw ConventionError("hs_to_tensor: expected an operator on a conjugate space, got domain " +
                              op.domain().str());
    }
    if (op.codomain().conjugated()) {
        throw ConventionError("hs_to_tensor: codomain must be plain, got " + op.codomain().str());
    }
    return vec(op);
}

std::vector<Ket> direct_sum_iso(const TensorElement &t) {
    size_t m = t.first_dim();
    size_t n = t.second_dim();
    std::vector<Ket> blocks;
    blocks.reserve(n);
    for (size_t j = 0; j < n; j++) {
        std::vector<Complex> w(m);
        for (size_t i = 0; i < m; i++) {
            w[i] = t[i * n + j];
        }
        blocks.emplace_back(SpaceLabel(m), std::move(w));
    }
    return blocks;
}

TensorElement direct_sum_inverse(std::span<const Ket> blocks) {
    if (blocks.empty()) {
        throw std::invalid_argument("direct_sum_inverse: no blocks");
    }
    size_t n = blocks.size();
    size_t m = blocks.front().dim();
    std::vector<Complex> out(m * n);
    for (size_t j = 0; j < n; j++) {
        require_same_space(blocks.front().space(), blocks[j].space(), "direct_sum_inverse");
        require_plain(blocks[j], "direct_sum_inverse");
        for (size_t i = 0; i < m; i++) {
            out[i * n + j] = blocks[j][i];
        }
    }
    return TensorElement(m, n, std::move(out));
}

NestedTensor::NestedTensor(std::array<size_t, 3> dims, Grouping grouping, std::vector<Complex> coords)
    : dims_(dims), grouping_(grouping), coords_(std::move(coords)) {
    for (size_t d : dims_) {
        if (d == 0) {
            throw std::invalid_argument("NestedTensor: factor dimensions must be at least 1");
        }
    }
    if (coords_.size() != dims_[0] * dims_[1] * dims_[2]) {
        throw SpaceMismatchError("NestedTensor: " + std::to_string(coords_.size()) + " coordinates for " +
                                 std::to_string(dims_[0]) + " x " + std::to_string(dims_[1]) + " x " +
                                 std::to_string(dims_[2]));
    }
}

double NestedTensor::sigma() const {
    return euclidean_norm(coords_);
}

TensorElement NestedTensor::outer() const {
    if (grouping_ == Grouping::kRight) {
        return TensorElement(dims_[0], dims_[1] * dims_[2], coords_);
    }
    return TensorElement(dims_[0] * dims_[1], dims_[2], coords_);
}

NestedTensor kron_right(const Ket &x, const Ket &z, const Ket &u) {
    TensorElement inner = kron(z, u);
    TensorElement t = kron(x, inner.as_ket());
    return NestedTensor({x.dim(), z.dim(), u.dim()}, Grouping::kRight, {t.coords().begin(), t.coords().end()});
}

NestedTensor kron_left(const Ket &x, const Ket &z, const Ket &u) {
    TensorElement inner = kron(x, z);
    TensorElement t = kron(inner.as_ket(), u);
    return NestedTensor({x.dim(), z.dim(), u.dim()}, Grouping::kLeft, {t.coords().begin(), t.coords().end()});
}

NestedTensor assoc_iso(const NestedTensor &r) {
    if (r.grouping() != Grouping::kRight) {
        throw SpaceMismatchError("assoc_iso: expected H (x) (K (x) L) grouping");
    }
    return NestedTensor(r.dims(), Grouping::kLeft, {r.coords().begin(), r.coords().end()});
}

NestedTensor assoc_iso_inverse(const NestedTensor &t) {
    if (t.grouping() != Grouping::kLeft) {
        throw SpaceMismatchError("assoc_iso_inverse: expected (H (x) K) (x) L grouping");
    }
    return NestedTensor(t.dims(), Grouping::kRight, {t.coords().begin(), t.coords().end()});
}

NestedTensor assoc_via_operator_sum(const NestedTensor &r, const std::optional<Matrix> &basis_h,
                                    const std::optional<Matrix> &basis_k) {
    if (r.grouping() != Grouping::kRight) {
        throw SpaceMismatchError("assoc_via_operator_sum: expected H (x) (K (x) L) grouping");
    }
    auto [m, n, p] = r.dims();
    if ((basis_h && (basis_h->rows() != m || basis_h->cols() != m)) ||
        (basis_k && (basis_k->rows() != n || basis_k->cols() != n))) {
        throw SpaceMismatchError("assoc_via_operator_sum: basis matrix has the wrong shape");
    }
    SpaceLabel h(m);
    SpaceLabel k(n);
    SpaceLabel l(p);

    // R : conj(H) -> H_1, with H_1 = S_2(conj(K), L) carried as K (x) L.
    Operator big_r = tensor_to_hs(r.outer());

    auto basis_vector = [](const std::optional<Matrix> &basis, SpaceLabel space, size_t idx) {
        if (!basis) {
            return Ket::basis(space, idx);
        }
        return Ket(space, basis->column_entries(idx));
    };

    // Precompute (R g_a) h_b in L for every pair of basis vectors.
    std::vector<Ket> r_g(m, Ket::zero(SpaceLabel(n * p)));
    std::vector<Ket> g(m, Ket::zero(h));
    std::vector<Ket> hb(n, Ket::zero(k));
    for (size_t a = 0; a < m; a++) {
        g[a] = basis_vector(basis_h, h, a);
        r_g[a] = apply(big_r, g[a].reinterpret_in_conjugate());
    }
    for (size_t b = 0; b < n; b++) {
        hb[b] = basis_vector(basis_k, k, b);
    }
    std::vector<std::vector<Ket>> rgh(m);
    for (size_t a = 0; a < m; a++) {
        Operator h1 = tensor_to_hs(TensorElement::from_ket(r_g[a], n));
        for (size_t b = 0; b < n; b++) {
            rgh[a].push_back(apply(h1, hb[b].reinterpret_in_conjugate()));
        }
    }

    // Column (s * n + t) of U_R is U_R(e_s (x)_{H-bar} f_t).
    Matrix u_r(p, m * n);
    for (size_t s = 0; s < m; s++) {
        for (size_t t = 0; t < n; t++) {
            Operator basis_t = dyad(Ket::basis(h.conjugate(), s), Ket::basis(k, t));
            Ket image = Ket::zero(l);
            for (size_t a = 0; a < m; a++) {
                Ket tg = apply(basis_t, g[a].reinterpret_in_conjugate());
                for (size_t b = 0; b < n; b++) {
                    Complex coeff = inner_math(hb[b], tg);
                    if (coeff != Complex{}) {
                        image += rgh[a][b].scaled(coeff);
                    }
                }
            }
            for (size_t q = 0; q < p; q++) {
                u_r(q, s * n + t) = image[q];
            }
        }
    }
    Operator u(SpaceLabel::conj(m * n), l, std::move(u_r));
    TensorElement flat = hs_to_tensor(u);
    return NestedTensor(r.dims(), Grouping::kLeft, {flat.coords().begin(), flat.coords().end()});
}

NestedTensor apply_middle(const NestedTensor &t, const Operator &v) {
    auto [m, n, p] = t.dims();
    if (v.domain() != SpaceLabel(n) || v.codomain() != SpaceLabel(n)) {
        throw SpaceMismatchError("apply_middle: operator must act on the middle factor C^" + std::to_string(n));
    }
    Operator full = kron_op(kron_op(Operator::identity(SpaceLabel(m)), v), Operator::identity(SpaceLabel(p)));
    std::vector<Complex> out = multiply(full.matrix(), t.coords());
    return NestedTensor(t.dims(), t.grouping(), std::move(out));
}

}  // namespace braket
