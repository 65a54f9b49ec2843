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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace braket;

TEST(matrix, basic_ops) {
    Matrix a{{1, 2}, {3, {0, 1}}};
    ASSERT_EQ(a.rows(), 2u);
    ASSERT_EQ(a(1, 1), Complex(0, 1));
    ASSERT_EQ(a.adjoint(), (Matrix{{1, 3}, {2, {0, -1}}}));
    ASSERT_EQ(a.transpose(), (Matrix{{1, 3}, {2, {0, 1}}}));
    ASSERT_EQ(a.conjugate(), (Matrix{{1, 2}, {3, {0, -1}}}));
    ASSERT_EQ(a.trace(), Complex(1, 1));
    ASSERT_EQ(a * Matrix::identity(2), a);
    ASSERT_EQ(Matrix::column(std::vector<Complex>{1, 2}).rows(), 2u);
    ASSERT_EQ(Matrix::row(std::vector<Complex>{1, 2}).rows(), 1u);
    ASSERT_THROW(Matrix(2, 2, std::vector<Complex>(3)), std::invalid_argument);
    ASSERT_THROW(Matrix::identity(2) * Matrix::identity(3), std::invalid_argument);
}

TEST(matrix, product_matches_oracle) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; t++) {
        size_t m = 1 + rng() % 5;
        size_t k = 1 + rng() % 5;
        size_t n = 1 + rng() % 5;
        oracle::Mat a = oracle::random_mat(rng, m, k);
        oracle::Mat b = oracle::random_mat(rng, k, n);
        EXPECT_LE(oracle::max_diff(to_mat(from_mat(a) * from_mat(b)), oracle::matmul(a, b)), 1e-14);
        oracle::Vec v = oracle::random_vec(rng, k);
        EXPECT_LE(oracle::max_diff(multiply(from_mat(a), v), oracle::matvec(a, v)), 1e-14);
        EXPECT_NEAR(from_mat(a).frobenius_norm(), oracle::frobenius(a), 1e-14);
    }
}

TEST(matrix, euclidean_norm_avoids_overflow) {
    std::vector<Complex> v{1e200, 1e200};
    EXPECT_NEAR(euclidean_norm(v) / 1e200, std::sqrt(2.0), 1e-15);
    EXPECT_EQ(euclidean_norm(std::vector<Complex>{}), 0);
}

TEST(matrix, largest_singular_value_narrow_oracle) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; t++) {
        size_t rows = 1 + rng() % 6;
        size_t cols = 1 + rng() % 2;
        oracle::Mat a = oracle::random_mat(rng, rows, cols);
        double expected = oracle::sigma_max_narrow(a);
        EXPECT_NEAR(largest_singular_value(from_mat(a)), expected, 1e-9 * expected);
    }
}

TEST(matrix, largest_singular_value_hard_starts) {
    // (1,1)/sqrt(2) lies in the kernel.
    Matrix k{{1, -1}, {1, -1}};
    EXPECT_NEAR(largest_singular_value(k), 2, 1e-12);
    // The uniform start is the second singular vector of a diagonal matrix.
    Matrix d{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_NEAR(largest_singular_value(d), 2, 1e-12);
    EXPECT_EQ(largest_singular_value(Matrix(3, 2)), 0);
}
