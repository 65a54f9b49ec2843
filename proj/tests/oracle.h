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

#ifndef BRAKET_TESTS_ORACLE_H
#define BRAKET_TESTS_ORACLE_H

// Naive reference computations used as test oracles. Written from the
// definitions with explicit loops, sharing no code with the library.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<Vec>;  // row-major, m[r][c]

inline Vec random_vec(std::mt19937_64 &rng, size_t n) {
    std::uniform_real_distribution<double> d(-1, 1);
    Vec v(n);
    for (auto &c : v) {
        c = C(d(rng), d(rng));
    }
    return v;
}

inline Mat random_mat(std::mt19937_64 &rng, size_t rows, size_t cols) {
    Mat m(rows);
    for (auto &r : m) {
        r = random_vec(rng, cols);
    }
    return m;
}

// sum x_i conj(y_i)
inline C inner_linear_first(const Vec &x, const Vec &y) {
    C s = 0;
    for (size_t i = 0; i < x.size(); i++) {
        s += x[i] * std::conj(y[i]);
    }
    return s;
}

inline double norm(const Vec &x) {
    double s = 0;
    for (const auto &c : x) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

inline Vec matvec(const Mat &m, const Vec &v) {
    Vec out(m.size());
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

inline Mat matmul(const Mat &a, const Mat &b) {
    Mat out(a.size(), Vec(b[0].size()));
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b[0].size(); c++) {
            for (size_t k = 0; k < b.size(); k++) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

inline Mat conj_transpose(const Mat &a) {
    Mat out(a[0].size(), Vec(a.size()));
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < a[0].size(); c++) {
            out[c][r] = std::conj(a[r][c]);
        }
    }
    return out;
}

// Block form (x_1 y^T | x_2 y^T | ...)^T built by appending blocks.
inline Vec kron(const Vec &x, const Vec &y) {
    Vec out;
    for (const auto &xi : x) {
        for (const auto &yj : y) {
            out.push_back(xi * yj);
        }
    }
    return out;
}

// Block matrix [a_{rc} B].
inline Mat kron(const Mat &a, const Mat &b) {
    Mat out;
    for (const auto &arow : a) {
        for (const auto &brow : b) {
            Vec row;
            for (const auto &acoef : arow) {
                for (const auto &bcoef : brow) {
                    row.push_back(acoef * bcoef);
                }
            }
            out.push_back(row);
        }
    }
    return out;
}

// Frobenius norm as the sqrt of sum of squared moduli.
inline double frobenius(const Mat &a) {
    double s = 0;
    for (const auto &row : a) {
        for (const auto &c : row) {
            s += std::norm(c);
        }
    }
    return std::sqrt(s);
}

// Largest singular value via the eigenvalues of the 2x2 (or 1x1) Gram matrix.
// Only used for matrices with at most two columns.
inline double sigma_max_narrow(const Mat &a) {
    size_t cols = a[0].size();
    double g00 = 0;
    double g11 = 0;
    C g01 = 0;
    for (const auto &row : a) {
        g00 += std::norm(row[0]);
        if (cols > 1) {
            g11 += std::norm(row[1]);
            g01 += std::conj(row[0]) * row[1];
        }
    }
    double tr = g00 + g11;
    double det = g00 * g11 - std::norm(g01);
    return std::sqrt(tr / 2 + std::sqrt(std::max(0.0, tr * tr / 4 - det)));
}

inline double max_diff(const Vec &a, const Vec &b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

inline double max_diff(const Mat &a, const Mat &b) {
    double m = 0;
    for (size_t r = 0; r < a.size(); r++) {
        m = std::max(m, max_diff(a[r], b[r]));
    }
    return m;
}

// Three-qubit state vector with qubit 0 as the most significant bit.
// Gates act through bit manipulation on basis indices.
inline Vec apply_hadamard_q0(const Vec &s) {
    const double h = 1 / std::sqrt(2.0);
    Vec out(8);
    for (size_t b = 0; b < 8; b++) {
        size_t bit = (b >> 2) & 1;
        out[b & ~size_t{4}] += h * s[b];
        out[b | 4] += (bit ? -h : h) * s[b];
    }
    return out;
}

inline Vec apply_cnot_q0_q1(const Vec &s) {
    Vec out(8);
    for (size_t b = 0; b < 8; b++) {
        size_t target = ((b >> 2) & 1) ? b ^ 2 : b;
        out[target] = s[b];
    }
    return out;
}

}  // namespace oracle

#endif
