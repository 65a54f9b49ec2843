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

#include "braket/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace braket {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

Matrix::Matrix(size_t rows, size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument(
            "Matrix: expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer list");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::column(std::span<const Complex> entries) {
    return Matrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

Matrix Matrix::row(std::span<const Complex> entries) {
    return Matrix(1, entries.size(), std::vector<Complex>(entries.begin(), entries.end()));
}

std::vector<Complex> Matrix::column_entries(size_t c) const {
    std::vector<Complex> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

double Matrix::frobenius_norm() const {
    return euclidean_norm(data_);
}

Complex Matrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("Matrix::trace: matrix is not square");
    }
    Complex t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("Matrix: shape mismatch in addition");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("Matrix: shape mismatch in subtraction");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument(
            "Matrix: cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; r++) {
        for (size_t k = 0; k < a.cols_; k++) {
            Complex s = a(r, k);
            if (s == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < b.cols_; c++) {
                out(r, c) += s * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> multiply(const Matrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("multiply: matrix/vector size mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        Complex s = 0;
        for (size_t c = 0; c < m.cols(); c++) {
            s += m(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return max_abs_diff(a.data(), b.data());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_diff: length mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

double euclidean_norm(std::span<const Complex> v) {
    // Scaled accumulation keeps tiny and huge entries from under/overflowing.
    double scale = 0;
    for (const auto &z : v) {
        scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
    }
    if (scale == 0) {
        return 0;
    }
    double sum = 0;
    for (const auto &z : v) {
        double re = z.real() / scale;
        double im = z.imag() / scale;
        sum += re * re + im * im;
    }
    return scale * std::sqrt(sum);
}

namespace {

// Power iteration on the Gram matrix A*A from `v`. Returns the dominant
// eigenvalue reachable from `v`, or -1 if `v` lies in the kernel.
double power_iterate(const Matrix &gram, std::vector<Complex> v,
                     const PowerIterationOptions &options, double collapse_floor) {
    double previous = -1;
    double rayleigh = 0;
    for (int iter = 0; iter < options.max_iterations; iter++) {
        std::vector<Complex> w = multiply(gram, v);
        double w_norm = euclidean_norm(w);
        if (w_norm <= collapse_floor) {
            // v is (numerically) in the kernel of A; only a true zero matrix is
            // allowed to end here.
            return iter == 0 ? -1 : rayleigh;
        }
        // Rayleigh quotient v*(A*A)v with unit v.
        Complex q = 0;
        for (size_t k = 0; k < v.size(); k++) {
            q += std::conj(v[k]) * w[k];
        }
        rayleigh = q.real();
        for (auto &z : w) {
            z /= w_norm;
        }
        v = std::move(w);
        if (previous >= 0 && std::abs(rayleigh - previous) <= options.tolerance * rayleigh) {
            break;
        }
        previous = rayleigh;
    }
    return rayleigh;
}

}  // namespace

double largest_singular_value(const Matrix &a, const PowerIterationOptions &options) {
    size_t n = a.cols();
    double fro = a.frobenius_norm();
    if (n == 0 || a.rows() == 0 || fro == 0) {
        return 0;
    }
    Matrix gram = a.adjoint() * a;
    double collapse_floor = 1e-14 * fro * fro;

    std::vector<Complex> start(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0));
    double lambda = power_iterate(gram, start, options, collapse_floor);
    // A start orthogonal to the top singular vector converges to a smaller
    // singular value. The top vector has a component of size >= 1/sqrt(n) on
    // some e_k, so also iterating from every basis vector and keeping the max
    // is enough.
    for (size_t k = 0; k < n; k++) {
        std::vector<Complex> basis(n);
        basis[k] = 1;
        lambda = std::max(lambda, power_iterate(gram, basis, options, collapse_floor));
    }
    return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace braket
