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

#ifndef BRAKET_MATRIX_H
#define BRAKET_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace braket {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The only storage type used by the library;
/// everything above it (kets, operators, tensors) wraps one of these or a
/// coordinate vector.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);
    Matrix(size_t rows, size_t cols, std::vector<Complex> row_major);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(size_t n);
    static Matrix zeros(size_t rows, size_t cols) { return Matrix(rows, cols); }
    static Matrix column(std::span<const Complex> entries);
    static Matrix row(std::span<const Complex> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const { return data_; }
    std::vector<Complex> column_entries(size_t c) const;

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;

    double frobenius_norm() const;
    Complex trace() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex scalar);

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

std::vector<Complex> multiply(const Matrix &m, std::span<const Complex> v);

/// Largest absolute entrywise difference. Shapes must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

double euclidean_norm(std::span<const Complex> v);

struct PowerIterationOptions {
    double tolerance = 1e-12;
    int max_iterations = 10000;
};

/// Largest singular value by power iteration on A*A.
///
/// Starts from (1,...,1)/sqrt(n), then repeats from each of e_1..e_n and keeps
/// the largest estimate, so a start vector orthogonal to the top singular
/// vector cannot hide it. Deterministic.
double largest_singular_value(const Matrix &a, const PowerIterationOptions &options = {});

}  // namespace braket

#endif
