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

#ifndef BRAKET_SPACES_H
#define BRAKET_SPACES_H

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "braket/matrix.h"

namespace braket {

/// A finite-dimensional complex Hilbert space C^dim, either with its usual
/// linear structure (H) or as its conjugate space (H-bar): the same set with
/// scalar action lambda * x := conj(lambda) x and inner product
/// <x,y>_{H-bar} := conj(<x,y>_H).
class SpaceLabel {
   public:
    explicit SpaceLabel(size_t dim, bool conjugated = false);

    static SpaceLabel plain(size_t dim) { return SpaceLabel(dim, false); }
    static SpaceLabel conj(size_t dim) { return SpaceLabel(dim, true); }

    size_t dim() const { return dim_; }
    bool conjugated() const { return conjugated_; }

    /// H <-> H-bar. An involution.
    SpaceLabel conjugate() const { return SpaceLabel(dim_, !conjugated_); }

    std::string str() const;

    friend bool operator==(const SpaceLabel &, const SpaceLabel &) = default;

   private:
    size_t dim_;
    bool conjugated_;
};

/// A vector |x> of a labeled space.
///
/// Coordinates are always the coordinates of the underlying set element in the
/// standard basis e_1..e_dim, whatever the label. Because H-bar has a different
/// scalar action, the *linear* coordinates of a conjugated-space ket (its
/// expansion x = sum <x,e_i>_{H-bar} * e_i) are the complex conjugates of the
/// stored ones; see linear_coords().
class Ket {
   public:
    Ket(SpaceLabel space, std::vector<Complex> coords);
    Ket(SpaceLabel space, std::initializer_list<Complex> coords)
        : Ket(space, std::vector<Complex>(coords)) {
    }
    /// Plain-space ket.
    explicit Ket(std::vector<Complex> coords);
    Ket(std::initializer_list<Complex> coords) : Ket(std::vector<Complex>(coords)) {
    }

    static Ket zero(SpaceLabel space);
    /// e_{index}, zero-based.
    static Ket basis(SpaceLabel space, size_t index);
    /// Inverse of linear_coords().
    static Ket from_linear_coords(SpaceLabel space, std::span<const Complex> linear);

    const SpaceLabel &space() const { return space_; }
    size_t dim() const { return coords_.size(); }
    std::span<const Complex> coords() const { return coords_; }
    const Complex &operator[](size_t k) const { return coords_[k]; }

    std::vector<Complex> linear_coords() const;

    /// The same set element read in the other space (H <-> H-bar). Coordinates
    /// are untouched; contrast conjugation_map().
    Ket reinterpret_in_conjugate() const;

    /// Ordinary set-level scalar multiple alpha*x (coordinates times alpha).
    Ket scaled(Complex alpha) const;

    Ket &operator+=(const Ket &other);
    Ket &operator-=(const Ket &other);
    friend Ket operator+(Ket a, const Ket &b) { return a += b; }
    friend Ket operator-(Ket a, const Ket &b) { return a -= b; }

    friend bool operator==(const Ket &, const Ket &) = default;

   private:
    SpaceLabel space_;
    std::vector<Complex> coords_;
};

/// A continuous linear functional on a labeled space.
///
/// `coords` are stored so that applying the bra to y yields
/// sum_i conj(coords_i) * linear_coords(y)_i.
class Bra {
   public:
    Bra(SpaceLabel space, std::vector<Complex> coords);

    const SpaceLabel &space() const { return space_; }
    std::span<const Complex> coords() const { return coords_; }

    Complex operator()(const Ket &y) const;

    /// sup over unit y of |<this|y>|, computed as the largest singular value
    /// of the 1 x dim row matrix.
    double operator_norm() const;

    friend bool operator==(const Bra &, const Bra &) = default;

   private:
    SpaceLabel space_;
    std::vector<Complex> coords_;
};

void require_same_space(const SpaceLabel &a, const SpaceLabel &b, const char *context);

/// Mathematics convention <x,y>: linear in x, conjugate-linear in y.
/// On H-bar this is conj(<x,y>_H), the inner product of the conjugate space.
Complex inner_math(const Ket &x, const Ket &y);

/// Physics convention <x|y> := <x,y>_{H-bar} = conj(<x,y>): conjugate-linear
/// in x, linear in y.
Complex inner_phys(const Ket &x, const Ket &y);

/// lambda * x = conj(lambda) x, the scalar action of the conjugate space.
/// Throws ConventionError for a plain-space ket.
Ket conjugate_scalar_mul(Complex lambda, const Ket &x);

/// C_H in the standard basis: entrywise conjugation, label flipped.
Ket conjugation_map(const Ket &x);

/// Frechet-Riesz: x -> <x|.>.
Bra riesz_bra(const Ket &x);
Ket riesz_inverse(const Bra &b);

double norm(const Ket &x);

}  // namespace braket

#endif
