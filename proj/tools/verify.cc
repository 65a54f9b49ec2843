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

#include "verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "braket/braket.h"

namespace braket::cli {

namespace {

// Power iteration and sampling do not reach algebraic precision.
constexpr double kIterativeTol = 1e-9;
constexpr double kFrequencyTol = 0.02;
constexpr int kFrequencySamples = 10000;

class Check {
   public:
    Check(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {
    }

    void observe(double residual) {
        instances_++;
        max_residual_ = std::max(max_residual_, residual);
        if (!(residual <= tolerance_)) {
            passed_ = false;
        }
    }

    CheckResult result() const {
        return CheckResult{name_, max_residual_, tolerance_, instances_, passed_};
    }

   private:
    std::string name_;
    double tolerance_;
    double max_residual_ = 0;
    int instances_ = 0;
    bool passed_ = true;
};

using Rng = std::mt19937_64;

size_t random_dim(Rng &rng, size_t max_dim) {
    return 1 + rng() % max_dim;
}

// Upper bound for the second singular value: sqrt(sum |2x2 minors|^2) / sigma_1.
double second_singular_value_bound(const Matrix &m) {
    double sigma1 = largest_singular_value(m);
    if (sigma1 == 0) {
        return 0;
    }
    double sum = 0;
    for (size_t r1 = 0; r1 < m.rows(); r1++) {
        for (size_t r2 = r1 + 1; r2 < m.rows(); r2++) {
            for (size_t c1 = 0; c1 < m.cols(); c1++) {
                for (size_t c2 = c1 + 1; c2 < m.cols(); c2++) {
                    sum += std::norm(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
                }
            }
        }
    }
    return std::sqrt(sum) / sigma1;
}

template <typename F>
void for_each_trial(const VerifyOptions &options, uint64_t suite_salt, F &&body) {
    for (int t = 0; t < options.trials; t++) {
        Rng rng(derive_seed(options.seed ^ suite_salt, static_cast<uint64_t>(t)));
        body(rng);
    }
}

std::vector<CheckResult> verify_spaces(const VerifyOptions &o) {
    Check examples("spaces.documented_examples", o.tol);
    Check hermitian("spaces.hermitian_symmetry", o.tol);
    Check sesqui("spaces.sesquilinearity", o.tol);
    Check parseval("spaces.parseval", o.tol);
    Check cauchy("spaces.cauchy_schwarz", o.tol);
    Check cauchy_eq("spaces.cauchy_schwarz_equality", kIterativeTol);
    Check conj_map("spaces.conjugation_map_contract", o.tol);
    Check riesz("spaces.riesz_round_trip", o.tol);
    Check riesz_norm("spaces.riesz_norm", kIterativeTol);

    {
        const double s = 1 / std::sqrt(2.0);
        examples.observe(std::abs(inner_math(Ket{1, 0}, Ket{{3, 4}, 5}) - Complex(3, -4)));
        examples.observe(std::abs(inner_phys(Ket{1, 0}, Ket{{3, 4}, 5}) - Complex(3, 4)));
        examples.observe(std::abs(inner_math(Ket{s, {0, s}}, Ket{s, {0, s}}) - 1.0));
        examples.observe(std::abs(inner_math(Ket{s, s}, Ket{s, -s})));
        Ket bar(SpaceLabel::conj(2), {1, 0});
        examples.observe(max_abs_diff(conjugate_scalar_mul({0, 1}, bar).coords(), Ket{{0, -1}, 0}.coords()));
        examples.observe(std::abs(norm(Ket{3, 4}) - 5));
        Ket x{{1, 1}, 2};
        examples.observe(max_abs_diff(conjugation_map(conjugation_map(x)).coords(), x.coords()));
        examples.observe(conjugation_map(x).space() == SpaceLabel::conj(2) ? 0.0 : 1.0);
    }

    for_each_trial(o, 0x5170ace5, [&](Rng &rng) {
        SpaceLabel h(random_dim(rng, 6));
        Ket x = random_ket(rng, h);
        Ket y = random_ket(rng, h);
        Complex lambda = random_complex(rng);
        Complex mu = random_complex(rng);
        double scale = norm(x) * norm(y);

        hermitian.observe(std::abs(inner_phys(x, y) - std::conj(inner_phys(y, x))) / scale);
        sesqui.observe(std::abs(inner_phys(x.scaled(lambda), y.scaled(mu)) -
                                std::conj(lambda) * mu * inner_phys(x, y)) /
                       (scale * std::abs(lambda) * std::abs(mu)));

        double sum = 0;
        for (size_t i = 0; i < h.dim(); i++) {
            sum += std::norm(inner_phys(Ket::basis(h, i), x));
        }
        parseval.observe(std::abs(sum - norm(x) * norm(x)) / (norm(x) * norm(x)));

        cauchy.observe(std::max(0.0, std::abs(inner_phys(x, y)) - scale - 1e-12));
        Ket parallel = x.scaled(lambda);
        cauchy_eq.observe(std::abs(std::abs(inner_phys(x, parallel)) - norm(x) * norm(parallel)) /
                          (norm(x) * norm(parallel)));

        Ket cx = conjugation_map(x);
        Ket cy = conjugation_map(y);
        conj_map.observe(std::abs(norm(cx) - norm(x)) / norm(x));
        conj_map.observe(std::abs(inner_math(cx, cy) - inner_math(x, y)) / scale);
        conj_map.observe(max_abs_diff(conjugation_map(x.scaled(lambda)).coords(),
                                      conjugate_scalar_mul(lambda, cx).coords()) /
                         (norm(x) * std::abs(lambda)));

        Bra b = riesz_bra(x);
        riesz.observe(std::abs(b(y) - inner_phys(x, y)) / scale);
        riesz.observe(max_abs_diff(riesz_inverse(b).coords(), x.coords()));
        riesz_norm.observe(std::abs(b.operator_norm() - norm(x)) / norm(x));
    });

    return {examples.result(), hermitian.result(), sesqui.result(),   parseval.result(), cauchy.result(),
            cauchy_eq.result(), conj_map.result(), riesz.result(), riesz_norm.result()};
}

std::vector<CheckResult> verify_operators(const VerifyOptions &o) {
    Check examples("operators.documented_examples", o.tol);
    Check adjoint_identity("operators.adjoint_identity", o.tol);
    Check anti_hom("operators.adjoint_anti_homomorphism", o.tol);
    Check bilinear("operators.conjugate_dyad_bilinearity", o.tol);
    Check rank_one("operators.dyad_rank_one", o.tol);
    Check push("operators.dyad_push_identities", o.tol);
    Check composition("operators.dyad_composition", o.tol);
    Check bra("operators.bra_adjoint_identity", o.tol);
    Check jmap("operators.ket_as_map_isometry", kIterativeTol);

    {
        SpaceLabel c2(2);
        examples.observe(max_abs_diff(apply(Operator::identity(c2), Ket{{1, 2}, 3}).coords(),
                                      Ket{{1, 2}, 3}.coords()));
        Operator d = dyad(Ket{1, 0}, Ket{0, 1, 0});
        examples.observe(max_abs_diff(apply(d, Ket{{0, 2}, 7}).coords(), Ket{0, {0, 2}, 0}.coords()));
        const double s = 1 / std::sqrt(2.0);
        examples.observe(std::abs(trace(dyad(Ket{s, s}, Ket{s, -s}))));
        examples.observe(std::abs(trace(Operator::identity(SpaceLabel(5))) - 5.0));
        examples.observe(max_abs_diff(apply(ket_as_map(Ket{2, 0}), Ket{3}).coords(), Ket{6, 0}.coords()));
        std::vector<std::pair<Ket, Ket>> pairs{{Ket::basis(c2, 0), Ket::basis(c2, 0)},
                                               {Ket::basis(c2, 1), Ket::basis(c2, 1)}};
        examples.observe(max_abs_diff(finite_rank_assemble(pairs).matrix(), Matrix::identity(2)));
    }

    for_each_trial(o, 0x0be7a705, [&](Rng &rng) {
        SpaceLabel h(random_dim(rng, 5));
        SpaceLabel k(random_dim(rng, 5));
        SpaceLabel l(random_dim(rng, 5));
        Operator a = random_operator(rng, h, k);
        Operator s = random_operator(rng, k, l);
        Ket x = random_ket(rng, h);
        Ket z = random_ket(rng, k);
        Complex lambda = random_complex(rng);
        double scale = a.matrix().frobenius_norm() * norm(x) * norm(z);

        adjoint_identity.observe(std::abs(inner_phys(z, apply(a, x)) - inner_phys(apply(adjoint(a), z), x)) /
                                 scale);
        anti_hom.observe(max_abs_diff(adjoint(adjoint(a)).matrix(), a.matrix()));
        anti_hom.observe(max_abs_diff(adjoint(compose(s, a)).matrix(), compose(adjoint(a), adjoint(s)).matrix()) /
                         (a.matrix().frobenius_norm() * s.matrix().frobenius_norm()));
        anti_hom.observe(max_abs_diff(adjoint(a.scaled(lambda)).matrix(),
                                      adjoint(a).scaled(std::conj(lambda)).matrix()) /
                         (a.matrix().frobenius_norm() * std::abs(lambda)));

        Complex mu = random_complex(rng);
        Ket xbar = x.reinterpret_in_conjugate();
        // (x, z) -> x (x)_{H-bar} z is bilinear on H x K: lambda x is the
        // multiple taken in H, then read in H-bar.
        Operator lhs = dyad(xbar.scaled(lambda), z.scaled(mu));
        Operator rhs = dyad(xbar, z).scaled(lambda * mu);
        bilinear.observe(max_abs_diff(lhs.matrix(), rhs.matrix()) / (norm(x) * norm(z) * std::abs(lambda * mu)));

        rank_one.observe(second_singular_value_bound(dyad(x, z).matrix()) / (norm(x) * norm(z)));

        // T (z (x) x) = z (x) Tx and (z (x) x) S = S* z (x) x.
        Operator t = random_operator(rng, h, l);
        push.observe(max_abs_diff(compose(t, dyad(z, x)).matrix(), dyad(z, apply(t, x)).matrix()) /
                     (t.matrix().frobenius_norm() * norm(x) * norm(z)));
        Operator s2 = random_operator(rng, l, k);
        push.observe(max_abs_diff(compose(dyad(z, x), s2).matrix(), dyad(apply(adjoint(s2), z), x).matrix()) /
                     (s2.matrix().frobenius_norm() * norm(x) * norm(z)));

        Ket z2 = random_ket(rng, k);
        Ket w = random_ket(rng, l);
        composition.observe(max_abs_diff(compose(dyad(z2, w), dyad(x, z)).matrix(),
                                         dyad(x, w).scaled(inner_phys(z2, z)).matrix()) /
                            (norm(x) * norm(z) * norm(z2) * norm(w)));

        Ket y = random_ket(rng, h);
        Bra zb = bra_compose(z, a);
        bra.observe(max_abs_diff(zb.coords(), riesz_bra(apply(adjoint(a), z)).coords()) /
                    (a.matrix().frobenius_norm() * norm(z)));
        bra.observe(std::abs(zb(y) - inner_phys(z, apply(a, y))) / (scale / norm(x) * norm(y)));

        Operator jx = ket_as_map(x);
        jmap.observe(max_abs_diff(map_as_ket(jx).coords(), x.coords()));
        jmap.observe(std::abs(operator_norm(jx) - norm(x)) / norm(x));
        jmap.observe(max_abs_diff(apply(jx, Ket{lambda}).coords(), x.scaled(lambda).coords()) /
                     (norm(x) * std::abs(lambda)));
    });

    return {examples.result(),  adjoint_identity.result(), anti_hom.result(),
            bilinear.result(),  rank_one.result(),         push.result(),
            composition.result(), bra.result(),            jmap.result()};
}

std::vector<CheckResult> verify_hs(const VerifyOptions &o) {
    Check basis("hs.dyad_basis_orthonormal", o.tol);
    Check inner("hs.inner_product_axioms", o.tol);
    Check unitary("hs.unitary_invariance", o.tol);
    Check recon("hs.dyad_basis_reconstruction", o.tol);
    Check plancherel("hs.plancherel", o.tol);
    Check summing("hs.two_summing_domination", kIterativeTol);
    Check attained("hs.two_summing_basis_equality", kIterativeTol);

    for (size_t m = 1; m <= 6; m++) {
        for (size_t n = 1; n <= 7; n++) {
            SpaceLabel h(m);
            SpaceLabel k(n);
            for (size_t i1 = 0; i1 < m; i1++) {
                for (size_t j1 = 0; j1 < n; j1++) {
                    Operator d1 = dyad(Ket::basis(h, i1), Ket::basis(k, j1));
                    for (size_t i2 = 0; i2 < m; i2++) {
                        for (size_t j2 = 0; j2 < n; j2++) {
                            Operator d2 = dyad(Ket::basis(h, i2), Ket::basis(k, j2));
                            double expected = (i1 == i2 && j1 == j2) ? 1.0 : 0.0;
                            basis.observe(std::abs(hs_inner(d1, d2) - expected));
                        }
                    }
                }
            }
        }
    }

    for_each_trial(o, 0x45c0ffee, [&](Rng &rng) {
        SpaceLabel h(random_dim(rng, 6));
        SpaceLabel k(random_dim(rng, 6));
        Operator s = random_operator(rng, h, k);
        Operator t = random_operator(rng, h, k);
        Complex lambda = random_complex(rng);
        double scale = hs_norm(s) * hs_norm(t);

        inner.observe(std::abs(hs_inner(s, t) - std::conj(hs_inner(t, s))) / scale);
        inner.observe(std::abs(hs_inner(s.scaled(lambda), t) - lambda * hs_inner(s, t)) / (scale * std::abs(lambda)));
        inner.observe(std::abs(hs_inner(s, t.scaled(lambda)) - std::conj(lambda) * hs_inner(s, t)) /
                      (scale * std::abs(lambda)));
        Complex self = hs_inner(s, s);
        inner.observe((self.real() > 0 ? 0.0 : 1.0) + std::abs(self.imag()) / self.real());

        Operator u(k, k, random_unitary(rng, k.dim()));
        Operator v(h, h, random_unitary(rng, h.dim()));
        unitary.observe(std::abs(hs_norm(compose(u, compose(t, v))) - hs_norm(t)) / hs_norm(t));

        Matrix lambda_ij = hs_coefficients(t);
        recon.observe(max_abs_diff(hs_reconstruct(lambda_ij, h, k).matrix(), t.matrix()) / hs_norm(t));
        double sum = 0;
        for (const auto &c : lambda_ij.data()) {
            sum += std::norm(c);
        }
        plancherel.observe(std::abs(sum - hs_norm(t) * hs_norm(t)) / (hs_norm(t) * hs_norm(t)));

        size_t family_size = 1 + rng() % 20;
        std::vector<Ket> family;
        for (size_t i = 0; i < family_size; i++) {
            family.push_back(random_ket(rng, h));
        }
        TwoSummingCheck check = two_summing_check(t, family);
        summing.observe(std::max(0.0, check.lhs - check.rhs));

        std::vector<Ket> standard;
        for (size_t i = 0; i < h.dim(); i++) {
            standard.push_back(Ket::basis(h, i));
        }
        TwoSummingCheck eq = two_summing_check(t, standard);
        attained.observe(std::abs(eq.lhs - hs_norm(t)) / hs_norm(t));
        attained.observe(std::abs(eq.rhs - hs_norm(t)) / hs_norm(t));
    });

    return {basis.result(), inner.result(), unitary.result(), recon.result(),
            plancherel.result(), summing.result(), attained.result()};
}

std::vector<CheckResult> verify_tensor(const VerifyOptions &o) {
    Check perm("tensor.commutation_matrix_permutation", o.tol);
    Check swap("tensor.commutation_matrix_swap", o.tol);
    Check bilinear("tensor.kron_bilinearity", o.tol);
    Check multiplicative("tensor.inner_product_multiplicativity", o.tol);
    Check isometry("tensor.hs_isometry", o.tol);
    Check intertwine("tensor.hs_intertwining", o.tol);
    Check mixed("tensor.mixed_product", o.tol);
    Check direct_sum("tensor.direct_sum_isometry", o.tol);
    Check assoc("tensor.associativity", o.tol);

    for (size_t m = 1; m <= 4; m++) {
        for (size_t n = 1; n <= 4; n++) {
            Operator k = commutation_matrix(m, n);
            const Matrix &km = k.matrix();
            double bad = 0;
            for (size_t r = 0; r < km.rows(); r++) {
                int ones_row = 0;
                int ones_col = 0;
                for (size_t c = 0; c < km.cols(); c++) {
                    ones_row += km(r, c) == Complex(1) ? 1 : 0;
                    ones_col += km(c, r) == Complex(1) ? 1 : 0;
                    bad += (km(r, c) == Complex(1) || km(r, c) == Complex(0)) ? 0 : 1;
                }
                bad += (ones_row == 1 ? 0 : 1) + (ones_col == 1 ? 0 : 1);
            }
            perm.observe(bad);
            perm.observe(max_abs_diff(compose(k, commutation_matrix(n, m)).matrix(), Matrix::identity(m * n)));
            for (size_t i = 0; i < m; i++) {
                for (size_t j = 0; j < n; j++) {
                    Ket x = Ket::basis(SpaceLabel(m), i);
                    Ket y = Ket::basis(SpaceLabel(n), j);
                    swap.observe(max_abs_diff(apply(k, kron(y, x)).coords(), kron(x, y).coords()));
                }
            }
        }
    }

    for_each_trial(o, 0x7e4502, [&](Rng &rng) {
        SpaceLabel h(1 + random_dim(rng, 4));
        SpaceLabel k(1 + random_dim(rng, 4));
        Ket x1 = random_ket(rng, h);
        Ket x2 = random_ket(rng, h);
        Ket z1 = random_ket(rng, k);
        Ket z2 = random_ket(rng, k);
        Complex lambda = random_complex(rng);

        TensorElement lhs = kron(x1.scaled(lambda) + x2, z1);
        std::vector<Complex> rhs(lhs.size());
        TensorElement a = kron(x1, z1);
        TensorElement b = kron(x2, z1);
        for (size_t q = 0; q < rhs.size(); q++) {
            rhs[q] = lambda * a[q] + b[q];
        }
        bilinear.observe(max_abs_diff(lhs.coords(), rhs) / lhs.sigma());
        TensorElement lhs2 = kron(x1, z1.scaled(lambda) + z2);
        TensorElement c = kron(x1, z2);
        for (size_t q = 0; q < rhs.size(); q++) {
            rhs[q] = lambda * a[q] + c[q];
        }
        bilinear.observe(max_abs_diff(lhs2.coords(), rhs) / lhs2.sigma());

        double scale = norm(x1) * norm(x2) * norm(z1) * norm(z2);
        multiplicative.observe(std::abs(inner_phys(kron(x1, z1).as_ket(), kron(x2, z2).as_ket()) -
                                        inner_phys(x1, x2) * inner_phys(z1, z2)) /
                               scale);

        TensorElement t(h.dim(), k.dim(), random_ket(rng, SpaceLabel(h.dim() * k.dim())).linear_coords());
        isometry.observe(std::abs(t.sigma() - hs_norm(tensor_to_hs(t))) / t.sigma());
        isometry.observe(max_abs_diff(hs_to_tensor(tensor_to_hs(t)).coords(), t.coords()));

        Operator am = random_operator(rng, h, h);
        Operator bm = random_operator(rng, k, k);
        Ket ax = apply(am, x1);
        Ket bz = apply(bm, z1);
        TensorElement mapped = apply(kron_op(am, bm), kron(x1, z1));
        double norm_ab = norm(ax) * norm(bz);
        mixed.observe(max_abs_diff(mapped.coords(), kron(ax, bz).coords()) / norm_ab);
        intertwine.observe(max_abs_diff(tensor_to_hs(mapped).matrix(),
                                        dyad(ax.reinterpret_in_conjugate(), bz).matrix()) /
                           norm_ab);

        std::vector<Ket> blocks = direct_sum_iso(t);
        double sum = 0;
        for (const auto &w : blocks) {
            sum += norm(w) * norm(w);
        }
        direct_sum.observe(std::abs(sum - t.sigma() * t.sigma()) / (t.sigma() * t.sigma()));
        direct_sum.observe(max_abs_diff(direct_sum_inverse(blocks).coords(), t.coords()));

        SpaceLabel l(1 + random_dim(rng, 3));
        Ket u = random_ket(rng, l);
        NestedTensor elementary = kron_right(x1, z1, u);
        assoc.observe(max_abs_diff(assoc_iso(elementary).coords(), kron_left(x1, z1, u).coords()) /
                      elementary.sigma());
        NestedTensor r({h.dim(), k.dim(), l.dim()}, Grouping::kRight,
                       random_ket(rng, SpaceLabel(h.dim() * k.dim() * l.dim())).linear_coords());
        NestedTensor regrouped = assoc_iso(r);
        assoc.observe(std::abs(regrouped.sigma() - r.sigma()) / r.sigma());
        Matrix gh = random_unitary(rng, h.dim());
        Matrix gk = random_unitary(rng, k.dim());
        assoc.observe(max_abs_diff(assoc_via_operator_sum(r, gh, gk).coords(), regrouped.coords()) / r.sigma());
        Operator v(k, k, random_unitary(rng, k.dim()));
        assoc.observe(max_abs_diff(assoc_iso(apply_middle(r, v)).coords(), apply_middle(regrouped, v).coords()) /
                      r.sigma());
    });

    return {perm.result(),  swap.result(),       bilinear.result(),   multiplicative.result(), isometry.result(),
            intertwine.result(), mixed.result(), direct_sum.result(), assoc.result()};
}

std::vector<CheckResult> verify_quantum(const VerifyOptions &o) {
    Check gates("quantum.gates_unitary", 1e-15);
    Check t_unitary("quantum.teleport_matrix_unitary", o.tol);
    Check factor("quantum.factorisation", 1e-15);
    Check equation("quantum.teleportation_equation", o.tol);
    Check general("quantum.general_version_witness", o.tol);
    Check branches("quantum.branch_fidelity", kIterativeTol);
    Check frequencies("quantum.outcome_frequencies", kFrequencyTol);

    for (const Operator &g : {pauli_x(), pauli_z(), pauli_xz(), hadamard(), cnot(), correction_unitary(1)}) {
        gates.observe(max_abs_diff(compose(g, adjoint(g)).matrix(), Matrix::identity(g.domain().dim())));
    }
    Operator t = teleport_matrix();
    t_unitary.observe(max_abs_diff(compose(t, adjoint(t)).matrix(), Matrix::identity(8)));
    Operator product = compose(kron_op(hadamard(), Operator::identity(SpaceLabel(4))),
                               kron_op(cnot(), Operator::identity(SpaceLabel(2))));
    factor.observe(max_abs_diff(product.matrix(), t.matrix()));

    for_each_trial(o, 0x9a7e5, [&](Rng &rng) {
        Qubit xi = random_qubit(rng);
        TensorElement lhs = apply(t, kron(xi.ket(), bell_phi_plus().as_ket()));
        std::vector<Complex> rhs(8);
        std::vector<Complex> rhs_general(8);
        for (int i = 1; i <= 4; i++) {
            TensorElement term = kron(Ket::basis(SpaceLabel(4), i - 1), apply(correction_unitary(i), xi.ket()));
            for (size_t q = 0; q < 8; q++) {
                rhs[q] += 0.5 * term[q];
            }
            // U_T = T, U_1 = Id and U_i = T_i: the same identity read as the
            // existence statement.
            Ket ui_xi = i == 1 ? xi.ket() : apply(correction_unitary(i), xi.ket());
            TensorElement gterm = kron(Ket::basis(SpaceLabel(4), i - 1), ui_xi);
            for (size_t q = 0; q < 8; q++) {
                rhs_general[q] += 0.5 * gterm[q];
            }
        }
        equation.observe(max_abs_diff(lhs.coords(), rhs) * std::sqrt(8.0));
        general.observe(max_abs_diff(teleport_apply(xi).coords(), rhs_general) * std::sqrt(8.0));

        for (int outcome = 1; outcome <= 4; outcome++) {
            TeleportTrace trace = teleport_forced(xi, outcome);
            branches.observe(1.0 - trace.fidelity);
        }
    });

    if (o.trials > 0) {
        Rng rng(derive_seed(o.seed, 0xf4e9));
        Qubit xi = random_qubit(rng);
        TensorElement psi2 = teleport_apply(xi);
        std::array<int, 4> counts{};
        for (int s = 0; s < kFrequencySamples; s++) {
            counts[measure_alice(psi2, derive_seed(o.seed, static_cast<uint64_t>(s))).outcome - 1]++;
        }
        for (int c : counts) {
            frequencies.observe(std::abs(static_cast<double>(c) / kFrequencySamples - 0.25));
        }
    }

    return {gates.result(),    t_unitary.result(), factor.result(),     equation.result(),
            general.result(), branches.result(),  frequencies.result()};
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"spaces", "operators", "hs", "tensor", "quantum", "all"};
    return names;
}

bool is_known_suite(const std::string &name) {
    const auto &names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string &name, const VerifyOptions &options) {
    static const std::map<std::string, std::function<std::vector<CheckResult>(const VerifyOptions &)>> suites{
        {"spaces", verify_spaces}, {"operators", verify_operators}, {"hs", verify_hs},
        {"tensor", verify_tensor}, {"quantum", verify_quantum},
    };
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const char *s : {"spaces", "operators", "hs", "tensor", "quantum"}) {
            auto part = suites.at(s)(options);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    auto it = suites.find(name);
    if (it == suites.end()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return it->second(options);
}

}  // namespace braket::cli
