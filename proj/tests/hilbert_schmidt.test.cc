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

#include <random>

#include "braket/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace braket;

// sum_{r,c} S_rc conj(T_rc), straight from the definition tr(T* S).
static Complex hs_oracle(const Operator &s, const Operator &t) {
    oracle::Mat a = to_mat(s.matrix());
    oracle::Mat b = to_mat(t.matrix());
    Complex sum = 0;
    for (size_t r = 0; r < a.size(); r++) {
        sum += oracle::inner_linear_first(a[r], b[r]);
    }
    return sum;
}

TEST(hilbert_schmidt, inner_examples) {
    SpaceLabel c2(2);
    EXPECT_EQ(hs_inner(Operator::identity(c2), Operator::identity(c2)), Complex(2));
    EXPECT_NEAR(hs_norm(Operator::identity(c2)), std::sqrt(2.0), 1e-15);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(1 + rng() % 5);
        SpaceLabel k(1 + rng() % 5);
        Operator s = random_operator(rng, h, k);
        Operator u = random_operator(rng, h, k);
        EXPECT_COMPLEX_NEAR(hs_inner(s, u), hs_oracle(s, u), 1e-12);
        EXPECT_NEAR(hs_norm(s), oracle::frobenius(to_mat(s.matrix())), 1e-13);
    }
}

TEST(hilbert_schmidt, inner_of_conjugate_dyads) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(1 + rng() % 4);
        SpaceLabel k(1 + rng() % 4);
        Ket x1 = random_ket(rng, h);
        Ket x2 = random_ket(rng, h);
        Ket z1 = random_ket(rng, k);
        Ket z2 = random_ket(rng, k);
        Operator d1 = dyad(x1.reinterpret_in_conjugate(), z1);
        Operator d2 = dyad(x2.reinterpret_in_conjugate(), z2);
        EXPECT_COMPLEX_NEAR(hs_inner(d1, d2), inner_math(x1, x2) * inner_math(z1, z2), 1e-12);
        // Plain-domain dyads pick up the conjugate on the first factor.
        EXPECT_COMPLEX_NEAR(hs_inner(dyad(x1, z1), dyad(x2, z2)), inner_math(x2, x1) * inner_math(z1, z2), 1e-12);
    }
}

TEST(hilbert_schmidt, inner_against_dyad) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(1 + rng() % 4);
        SpaceLabel k(1 + rng() % 4);
        Operator r = random_operator(rng, h, k);
        Ket x = random_ket(rng, h);
        Ket z = random_ket(rng, k);
        EXPECT_COMPLEX_NEAR(hs_inner(r, dyad(x, z)), inner_math(apply(r, x), z), 1e-12);
    }
}

TEST(hilbert_schmidt, dyad_norm) {
    Ket x{3, {0, 4}};
    Ket z{1, 2, 2};
    EXPECT_NEAR(hs_norm(dyad(x, z)), 15, 1e-13);
    EXPECT_NEAR(hs_norm(dyad(x.reinterpret_in_conjugate(), z)), 15, 1e-13);
}

TEST(hilbert_schmidt, unitary_invariance) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; t++) {
        SpaceLabel h(1 + rng() % 5);
        SpaceLabel k(1 + rng() % 5);
        Operator r = random_operator(rng, h, k);
        Operator u(h, h, random_unitary(rng, h.dim()));
        Operator v(k, k, random_unitary(rng, k.dim()));
        EXPECT_NEAR(hs_norm(compose(r, u)), hs_norm(r), 1e-12 * hs_norm(r));
        EXPECT_NEAR(hs_norm(compose(v, r)), hs_norm(r), 1e-12 * hs_norm(r));
    }
}

TEST(hilbert_schmidt, random_unitary_is_unitary) {
    std::mt19937_64 rng(5);
    for (size_t n = 1; n <= 6; n++) {
        Matrix u = random_unitary(rng, n);
        EXPECT_LE(oracle::max_diff(oracle::matmul(to_mat(u), oracle::conj_transpose(to_mat(u))),
                                   to_mat(Matrix::identity(n))),
                  1e-14);
    }
}

TEST(hilbert_schmidt, coefficients_examples) {
    SpaceLabel h(2);
    SpaceLabel k(3);
    Matrix lambda = hs_coefficients(dyad(Ket::basis(h, 0), Ket::basis(k, 1)));
    ASSERT_EQ(lambda.rows(), 2u);
    ASSERT_EQ(lambda.cols(), 3u);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 3; j++) {
            EXPECT_EQ(lambda(i, j), Complex(i == 0 && j == 1 ? 1 : 0));
        }
    }
    EXPECT_EQ(hs_coefficients(Operator::identity(h)), Matrix::identity(2));
}

TEST(hilbert_schmidt, coefficients_reconstruct_and_plancherel) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(1 + rng() % 6);
        SpaceLabel k(1 + rng() % 7);
        Operator r = random_operator(rng, h, k);
        Matrix lambda = hs_coefficients(r);
        // lambda_ij is the (j, i) matrix entry: <R e_i, f_j>.
        oracle::Mat m = to_mat(r.matrix());
        for (size_t i = 0; i < h.dim(); i++) {
            for (size_t j = 0; j < k.dim(); j++) {
                EXPECT_COMPLEX_NEAR(lambda(i, j), m[j][i], 1e-15);
            }
        }
        EXPECT_LE(max_abs_diff(hs_reconstruct(lambda, h, k).matrix(), r.matrix()), 1e-12);
        EXPECT_NEAR(lambda.frobenius_norm(), hs_norm(r), 1e-12 * hs_norm(r));
    }
}

TEST(hilbert_schmidt, weak_l2_norm) {
    SpaceLabel c3(3);
    std::vector<Ket> basis{Ket::basis(c3, 0), Ket::basis(c3, 1), Ket::basis(c3, 2)};
    EXPECT_NEAR(weak_l2_norm(basis), 1, 1e-12);
    std::vector<Ket> single{Ket{3, 4}};
    EXPECT_NEAR(weak_l2_norm(single), 5, 1e-12);
    Ket x{1, {0, 2}, -2};
    std::vector<Ket> twice{x, x};
    EXPECT_NEAR(weak_l2_norm(twice), std::sqrt(2.0) * 3, 1e-12);
    EXPECT_EQ(weak_l2_norm(std::vector<Ket>{}), 0);
}

TEST(hilbert_schmidt, weak_l2_norm_two_vectors_oracle) {
    // For two kets, sup over unit y of sqrt(|<x1,y>|^2 + |<x2,y>|^2) is the top
    // singular value of the dim x 2 matrix with columns x1, x2.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; t++) {
        size_t n = 1 + rng() % 5;
        oracle::Vec a = oracle::random_vec(rng, n);
        oracle::Vec b = oracle::random_vec(rng, n);
        oracle::Mat cols(n, oracle::Vec(2));
        for (size_t i = 0; i < n; i++) {
            cols[i][0] = a[i];
            cols[i][1] = b[i];
        }
        std::vector<Ket> family{Ket(a), Ket(b)};
        double expected = oracle::sigma_max_narrow(cols);
        EXPECT_NEAR(weak_l2_norm(family), expected, 1e-9 * expected);
    }
}

TEST(hilbert_schmidt, two_summing) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        SpaceLabel h(1 + rng() % 6);
        SpaceLabel k(1 + rng() % 6);
        Operator r = random_operator(rng, h, k);
        std::vector<Ket> family;
        size_t n = 1 + rng() % 20;
        for (size_t i = 0; i < n; i++) {
            family.push_back(random_ket(rng, h));
        }
        TwoSummingCheck c = two_summing_check(r, family);
        EXPECT_TRUE(c.ok) << c.lhs << " > " << c.rhs;

        std::vector<Ket> basis;
        for (size_t i = 0; i < h.dim(); i++) {
            basis.push_back(Ket::basis(h, i));
        }
        TwoSummingCheck eq = two_summing_check(r, basis);
        EXPECT_NEAR(eq.lhs, hs_norm(r), 1e-9 * hs_norm(r));
        EXPECT_NEAR(eq.rhs, hs_norm(r), 1e-9 * hs_norm(r));
    }
    std::vector<Ket> zero{Ket::zero(SpaceLabel(2))};
    TwoSummingCheck z = two_summing_check(Operator::identity(SpaceLabel(2)), zero);
    EXPECT_EQ(z.lhs, 0);
    EXPECT_TRUE(z.ok);
}
