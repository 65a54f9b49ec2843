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

#include "braket/operators.h"

#include <random>

#include "braket/errors.h"
#include "braket/quantum.h"
#include "braket/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace braket;

TEST(operators, apply_examples) {
    SpaceLabel c2(2);
    Ket x{{1, 2}, {0, -1}};
    ASSERT_EQ(apply(Operator::identity(c2), x), x);
    ASSERT_EQ(apply(pauli_x(), Ket{1, 0}), (Ket{0, 1}));
    ASSERT_EQ(apply(Operator::zero(c2, SpaceLabel(3)), x), Ket::zero(SpaceLabel(3)));
    ASSERT_THROW(apply(Operator::identity(c2), Ket{1, 2, 3}), SpaceMismatchError);
    ASSERT_THROW(apply(Operator::identity(c2), Ket(SpaceLabel::conj(2), {1, 0})), SpaceMismatchError);
}

TEST(operators, apply_columns_are_images_of_basis) {
    std::mt19937_64 rng(4);
    Operator a = random_operator(rng, SpaceLabel(3), SpaceLabel(4));
    for (size_t j = 0; j < 3; j++) {
        Ket image = apply(a, Ket::basis(SpaceLabel(3), j));
        ASSERT_EQ(to_vec(image.coords()), a.matrix().column_entries(j));
    }
}

TEST(operators, apply_on_conjugate_spaces) {
    // A map H-bar -> H-bar with matrix M acts on linear coordinates, which are
    // the conjugates of the stored ones.
    Matrix m{{1, {0, 1}}, {2, 3}};
    Operator a(SpaceLabel::conj(2), SpaceLabel::conj(2), m);
    Ket x(SpaceLabel::conj(2), {{1, 1}, {0, 2}});
    oracle::Vec lin{{1, -1}, {0, -2}};
    oracle::Vec image = oracle::matvec(to_mat(m), lin);
    for (auto &c : image) {
        c = std::conj(c);
    }
    EXPECT_LE(oracle::max_diff(to_vec(apply(a, x).coords()), image), 1e-15);
}

TEST(operators, adjoint_examples) {
    std::mt19937_64 rng(1);
    Operator a = random_operator(rng, SpaceLabel(3), SpaceLabel(2));
    ASSERT_EQ(adjoint(adjoint(a)), a);
    Operator sym(Matrix{{1, 2}, {2, -5}});
    ASSERT_EQ(adjoint(sym), sym);
    ASSERT_EQ(adjoint(a).domain(), SpaceLabel(2));
    ASSERT_EQ(adjoint(a).codomain(), SpaceLabel(3));
}

TEST(operators, adjoint_identity_random) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; t++) {
        SpaceLabel h(1 + rng() % 5);
        SpaceLabel k(1 + rng() % 5);
        Operator a = random_operator(rng, h, k);
        Ket x = random_ket(rng, h);
        Ket z = random_ket(rng, k);
        EXPECT_COMPLEX_NEAR(inner_phys(z, apply(a, x)), inner_phys(apply(adjoint(a), z), x), 1e-12);
    }
}

TEST(operators, adjoint_matches_oracle) {
    std::mt19937_64 rng(3);
    oracle::Mat m = oracle::random_mat(rng, 3, 4);
    Operator a(SpaceLabel(4), SpaceLabel(3), from_mat(m));
    EXPECT_EQ(to_mat(adjoint(a).matrix()), oracle::conj_transpose(m));
}

TEST(operators, dyad_example) {
    Operator d = dyad(Ket{1, 0}, Ket{0, 1, 0});
    ASSERT_EQ(d.domain(), SpaceLabel(2));
    ASSERT_EQ(d.codomain(), SpaceLabel(3));
    ASSERT_EQ(apply(d, Ket{{0, 2}, 7}), (Ket{0, {0, 2}, 0}));
}

TEST(operators, dyad_matches_definition) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(1 + rng() % 4);
        SpaceLabel k(1 + rng() % 4);
        Ket x = random_ket(rng, h);
        Ket z = random_ket(rng, k);
        Ket y = random_ket(rng, h);
        // (x (x) z) y = <x|y> z
        EXPECT_LE(max_abs_diff(apply(dyad(x, z), y).coords(), z.scaled(inner_phys(x, y)).coords()), 1e-13);
        // Over H-bar: (x (x)_{H-bar} z) xi = <x|xi>_{H-bar} z, and
        // x (x)_{H-bar} z = (C x (x)_H z) C.
        Ket xb = x.reinterpret_in_conjugate();
        Ket xi = y.reinterpret_in_conjugate();
        Operator db = dyad(xb, z);
        ASSERT_EQ(db.domain(), SpaceLabel::conj(h.dim()));
        EXPECT_LE(max_abs_diff(apply(db, xi).coords(), z.scaled(inner_phys(xb, xi)).coords()), 1e-13);
        Ket via_c = apply(dyad(conjugation_map(xb), z), conjugation_map(xi));
        EXPECT_LE(max_abs_diff(apply(db, xi).coords(), via_c.coords()), 1e-13);
    }
}

TEST(operators, conjugate_dyad_matrix_has_no_conjugation) {
    Ket x(SpaceLabel::conj(2), {{1, 2}, 3});
    Ket z{{0, 1}, 1};
    Matrix expected{{Complex(0, 1) * Complex(1, 2), Complex(0, 3)}, {Complex(1, 2), 3}};
    EXPECT_LE(max_abs_diff(dyad(x, z).matrix(), expected), 1e-15);
    Ket xp{{1, 2}, 3};
    Matrix expected_plain{{Complex(0, 1) * Complex(1, -2), Complex(0, 3)}, {Complex(1, -2), 3}};
    EXPECT_LE(max_abs_diff(dyad(xp, z).matrix(), expected_plain), 1e-15);
}

TEST(operators, dyad_bilinearity_over_conjugate_space) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; t++) {
        Ket x = random_ket(rng, SpaceLabel(3));
        Ket z = random_ket(rng, SpaceLabel(2));
        Complex lambda = random_complex(rng);
        Complex mu = random_complex(rng);
        Ket xb = x.reinterpret_in_conjugate();
        Matrix base = dyad(xb, z).matrix();
        // (lambda x) (x)_{H-bar} (mu z) = lambda mu (x (x)_{H-bar} z), lambda x the H-multiple.
        EXPECT_LE(max_abs_diff(dyad(x.scaled(lambda).reinterpret_in_conjugate(), z.scaled(mu)).matrix(),
                               base * (lambda * mu)),
                  1e-13);
        // The conjugate-space action scales by conj(lambda) instead.
        EXPECT_LE(max_abs_diff(dyad(conjugate_scalar_mul(lambda, xb), z.scaled(mu)).matrix(),
                               base * (std::conj(lambda) * mu)),
                  1e-13);
    }
}

TEST(operators, dyad_norm_and_adjoint) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; t++) {
        Ket x = random_ket(rng, SpaceLabel(1 + rng() % 4));
        Ket z = random_ket(rng, SpaceLabel(1 + rng() % 4));
        EXPECT_NEAR(operator_norm(dyad(x, z)), norm(x) * norm(z), 1e-9 * norm(x) * norm(z));
        EXPECT_NEAR(operator_norm(dyad(x.reinterpret_in_conjugate(), z)), norm(x) * norm(z),
                    1e-9 * norm(x) * norm(z));
        EXPECT_LE(max_abs_diff(adjoint(dyad(x, z)).matrix(), dyad(z, x).matrix()), 1e-15);
    }
}

TEST(operators, compose_examples) {
    std::mt19937_64 rng(8);
    Operator a = random_operator(rng, SpaceLabel(3), SpaceLabel(2));
    ASSERT_EQ(compose(a, Operator::identity(SpaceLabel(3))), a);
    ASSERT_THROW(compose(a, Operator::identity(SpaceLabel(2))), SpaceMismatchError);
    Operator d = compose(dyad(Ket{0, 1}, Ket{1, 1}), dyad(Ket{1, 1}, Ket{1, 0}));
    ASSERT_EQ(d, Operator::zero(SpaceLabel(2), SpaceLabel(2)));
}

TEST(operators, dyad_composition) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; t++) {
        SpaceLabel h(2 + rng() % 3);
        SpaceLabel k(2 + rng() % 3);
        SpaceLabel l(2 + rng() % 3);
        Ket x = random_ket(rng, h);
        Ket z1 = random_ket(rng, k);
        Ket z2 = random_ket(rng, k);
        Ket w = random_ket(rng, l);
        oracle::Mat lhs = oracle::matmul(to_mat(dyad(z2, w).matrix()), to_mat(dyad(x, z1).matrix()));
        EXPECT_LE(oracle::max_diff(to_mat(compose(dyad(z2, w), dyad(x, z1)).matrix()), lhs), 1e-13);
        EXPECT_LE(max_abs_diff(compose(dyad(z2, w), dyad(x, z1)).matrix(),
                               dyad(x, w).matrix() * inner_phys(z2, z1)),
                  1e-13);
    }
}

TEST(operators, trace) {
    const double s = 1 / std::sqrt(2.0);
    EXPECT_COMPLEX_NEAR(trace(dyad(Ket{s, s}, Ket{s, -s})), 0.0, 1e-16);
    EXPECT_EQ(trace(Operator::identity(SpaceLabel(4))), Complex(4));
    ASSERT_THROW(trace(Operator::zero(SpaceLabel(2), SpaceLabel(3))), SpaceMismatchError);
    ASSERT_THROW(trace(Operator::zero(SpaceLabel(2), SpaceLabel::conj(2))), SpaceMismatchError);

    std::mt19937_64 rng(10);
    for (int t = 0; t < 30; t++) {
        Operator a = random_operator(rng, SpaceLabel(3), SpaceLabel(3));
        Operator b = random_operator(rng, SpaceLabel(3), SpaceLabel(3));
        EXPECT_COMPLEX_NEAR(trace(compose(a, b)), trace(compose(b, a)), 1e-12);
        Ket x = random_ket(rng, SpaceLabel(3));
        Ket y = random_ket(rng, SpaceLabel(3));
        EXPECT_COMPLEX_NEAR(trace(dyad(x, y)), inner_phys(x, y), 1e-13);
        // tr(x (x)_{H-bar} y) = <x, y>_H on H-bar -> H-bar.
        Operator dc = dyad(x.reinterpret_in_conjugate(), y.reinterpret_in_conjugate());
        EXPECT_COMPLEX_NEAR(trace(dc), inner_math(x, y), 1e-13);
    }
}

TEST(operators, bra_compose) {
    Ket z{2, {0, 1}};
    ASSERT_EQ(bra_compose(z, Operator::identity(SpaceLabel(2))), riesz_bra(z));
    ASSERT_EQ(bra_compose(Ket{1, 0}, pauli_x()), riesz_bra(Ket{0, 1}));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; t++) {
        SpaceLabel h(1 + rng() % 4);
        SpaceLabel k(1 + rng() % 4);
        Operator a = random_operator(rng, h, k);
        Ket zz = random_ket(rng, k);
        Ket y = random_ket(rng, h);
        // <z|A = <A* z|
        EXPECT_LE(max_abs_diff(bra_compose(zz, a).coords(), riesz_bra(apply(adjoint(a), zz)).coords()), 1e-12);
        EXPECT_COMPLEX_NEAR(bra_compose(zz, a)(y), inner_phys(zz, apply(a, y)), 1e-12);
    }
}

TEST(operators, ket_as_map) {
    ASSERT_EQ(apply(ket_as_map(Ket{2, 0}), Ket{3}), (Ket{6, 0}));
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; t++) {
        Ket x = random_ket(rng, SpaceLabel(1 + rng() % 5));
        Operator j = ket_as_map(x);
        ASSERT_EQ(j.domain(), SpaceLabel(1));
        ASSERT_EQ(map_as_ket(j), x);
        EXPECT_NEAR(operator_norm(j), norm(x), 1e-9 * norm(x));
        // <x|* lambda = lambda |x>
        Complex lambda = random_complex(rng);
        Ket via_adjoint = apply(adjoint(Operator(SpaceLabel(x.dim()), SpaceLabel(1),
                                                 Matrix::row(riesz_bra(x).coords()).conjugate())),
                                Ket{lambda});
        EXPECT_LE(max_abs_diff(via_adjoint.coords(), x.scaled(lambda).coords()), 1e-13);
    }
    ASSERT_THROW(map_as_ket(Operator::identity(SpaceLabel(2))), SpaceMismatchError);
}

TEST(operators, finite_rank_assemble) {
    SpaceLabel c2(2);
    Ket e1 = Ket::basis(c2, 0);
    Ket e2 = Ket::basis(c2, 1);
    std::vector<std::pair<Ket, Ket>> single{{Ket{1, {0, 1}}, Ket{2, 3, 4}}};
    ASSERT_EQ(finite_rank_assemble(single), dyad(Ket{1, {0, 1}}, Ket{2, 3, 4}));
    std::vector<std::pair<Ket, Ket>> basis{{e1, e1}, {e2, e2}};
    ASSERT_EQ(finite_rank_assemble(basis), Operator::identity(c2));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; t++) {
        std::vector<std::pair<Ket, Ket>> pairs;
        std::vector<std::pair<Ket, Ket>> swapped;
        for (int i = 0; i < 3; i++) {
            Ket x = random_ket(rng, SpaceLabel(3));
            Ket z = random_ket(rng, SpaceLabel(4));
            pairs.emplace_back(x, z);
            swapped.emplace_back(z, x);
        }
        EXPECT_LE(max_abs_diff(adjoint(finite_rank_assemble(pairs)).matrix(), finite_rank_assemble(swapped).matrix()),
                  1e-13);
    }
}
