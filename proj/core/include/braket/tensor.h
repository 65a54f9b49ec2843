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

#ifndef BRAKET_TENSOR_H
#define BRAKET_TENSOR_H

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "braket/matrix.h"
#include "braket/operators.h"
#include "braket/spaces.h"

namespace braket {

/// An element t of C^m (x) C^n, realized through the Kronecker product.
///
/// Flat index convention: kron(x, y)[i * n + j] = x_i y_j (zero-based). Every
/// reshape in this header derives from that rule.
class TensorElement {
   public:
    TensorElement(size_t first_dim, size_t second_dim, std::vector<Complex> coords);

    size_t first_dim() const { return first_dim_; }
    size_t second_dim() const { return second_dim_; }
    SpaceLabel first() const { return SpaceLabel(first_dim_); }
    SpaceLabel second() const { return SpaceLabel(second_dim_); }
    size_t size() const { return coords_.size(); }

    std::span<const Complex> coords() const { return coords_; }
    const Complex &operator[](size_t k) const { return coords_[k]; }

    /// sigma(t) = sqrt(<t, t>), the Euclidean norm of the coordinates.
    double sigma() const;

    /// The flat element of C^{mn}.
    Ket as_ket() const;
    static TensorElement from_ket(const Ket &flat, size_t first_dim);

    /// Same coordinates read as an element of C^{first_dim} (x) C^{size/first_dim}.
    /// Identical flat coordinates represent the same element under either
    /// split, by associativity of the index flattening.
    TensorElement regroup(size_t first_dim) const;

    friend bool operator==(const TensorElement &, const TensorElement &) = default;

   private:
    size_t first_dim_;
    size_t second_dim_;
    std::vector<Complex> coords_;
};

/// x (x)_Kr y = (x_1 y^T | x_2 y^T | ...)^T. Both kets must be plain.
TensorElement kron(const Ket &x, const Ket &y);

/// Operator Kronecker product: block (i, j) is A_ij B.
Operator kron_op(const Operator &a, const Operator &b);

/// A t for an operator on C^{mn}; the result keeps t's factor split.
TensorElement apply(const Operator &a, const TensorElement &t);

/// Column stacking. For the n x m matrix y x^T, vec gives kron(x, y); the
/// result has factors (cols, rows).
TensorElement vec(const Operator &a);
/// Inverse of vec onto an operator domain -> codomain, where domain.dim() must
/// equal t.first_dim() and codomain.dim() t.second_dim().
Operator unvec(const TensorElement &t, SpaceLabel domain, SpaceLabel codomain);

/// K_{m,n} = sum_{i<m, j<n} e_i e_j^T (x)_Kr e_j e_i^T, the mn x mn permutation
/// with K_{m,n} kron(y, x) = kron(x, y) for x in C^m, y in C^n.
Operator commutation_matrix(size_t m, size_t n);

/// U_(x): C^m (x) C^n -> S_2(conj(C^m), C^n), with x (x) y -> x (x)_{H-bar} y.
Operator tensor_to_hs(const TensorElement &t);
/// Inverse of tensor_to_hs. Only operators conj(C^m) -> C^n are accepted; a
/// plain domain throws ConventionError rather than being silently conjugated.
TensorElement hs_to_tensor(const Operator &op);

/// psi: C^m (x) C^n -> (C^m)^n, x (x) z -> (<z, f_j> x)_j.
std::vector<Ket> direct_sum_iso(const TensorElement &t);
TensorElement direct_sum_inverse(std::span<const Ket> blocks);

enum class Grouping {
    /// H (x) (K (x) L), flat index (i, (j, k)).
    kRight,
    /// (H (x) K) (x) L, flat index ((i, j), k).
    kLeft,
};

/// An element of a threefold tensor product C^m (x) C^n (x) C^p with a
/// declared grouping. Coordinates are stored flat as i * n * p + j * p + k.
class NestedTensor {
   public:
    NestedTensor(std::array<size_t, 3> dims, Grouping grouping, std::vector<Complex> coords);

    const std::array<size_t, 3> &dims() const { return dims_; }
    Grouping grouping() const { return grouping_; }
    std::span<const Complex> coords() const { return coords_; }
    double sigma() const;

    /// The outer two-factor view: (m, n*p) when grouped right, (m*n, p) when left.
    TensorElement outer() const;

    friend bool operator==(const NestedTensor &, const NestedTensor &) = default;

   private:
    std::array<size_t, 3> dims_;
    Grouping grouping_;
    std::vector<Complex> coords_;
};

/// x (x) (z (x) u).
NestedTensor kron_right(const Ket &x, const Ket &z, const Ket &u);
/// (x (x) z) (x) u.
NestedTensor kron_left(const Ket &x, const Ket &z, const Ket &u);

/// H (x) (K (x) L) -> (H (x) K) (x) L. With the flat convention above the
/// coordinates do not move; only the grouping changes.
NestedTensor assoc_iso(const NestedTensor &r);
/// (H (x) K) (x) L -> H (x) (K (x) L).
NestedTensor assoc_iso_inverse(const NestedTensor &t);

/// The associativity map computed the long way. r is read as
/// R in S_2(conj(H), S_2(conj(K), L)); the result is U_R in
/// S_2(conj(S_2(conj(H), K)), L) given on basis elements T = e_a (x) f_b by
///   U_R(T) = sum_ij <f_j, T e_i>_K (R e_i) f_j,
/// then mapped back to (H (x) K) (x) L.
///
/// `basis_h` / `basis_k` are optional unitaries whose columns are the
/// orthonormal bases {e_i}, {f_j} used in the sum; the standard bases when
/// absent. The value does not depend on the choice.
NestedTensor assoc_via_operator_sum(const NestedTensor &r, const std::optional<Matrix> &basis_h = std::nullopt,
                                    const std::optional<Matrix> &basis_k = std::nullopt);

/// (Id (x) V (x) Id) applied to the flat coordinates: a change of basis in the
/// middle factor. Grouping is preserved.
NestedTensor apply_middle(const NestedTensor &t, const Operator &v);

}  // namespace braket

#endif
