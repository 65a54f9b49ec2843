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

#include "braket/quantum.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "braket/errors.h"

namespace braket {

namespace {

constexpr double kUnitTolerance = 1e-9;

Ket normalize_or_throw(const Ket &k) {
    double n = norm(k);
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return k.scaled(1.0 / n);
}

void require_outcome(int outcome) {
    if (outcome < 1 || outcome > 4) {
        throw std::out_of_range("outcome must be in 1..4, got " + std::to_string(outcome));
    }
}

void require_unit(const Ket &k, const char *what) {
    if (std::abs(norm(k) - 1.0) > kUnitTolerance) {
        throw std::invalid_argument(std::string("no_cloning_witness: ") + what + " is not a unit vector");
    }
}

}  // namespace

Qubit::Qubit(Complex alpha, Complex beta) : Qubit(Ket{alpha, beta}) {
}

Qubit::Qubit(const Ket &ket) : ket_(ket) {
    if (ket.space() != SpaceLabel(2)) {
        throw SpaceMismatchError("Qubit: expected a ket of C^2, got " + ket.space().str());
    }
    double n = norm(ket);
    if (std::abs(n - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("Qubit: state has norm " + std::to_string(n) + ", expected 1");
    }
    ket_ = ket.scaled(1.0 / n);
}

Qubit Qubit::normalized(Complex alpha, Complex beta) {
    return Qubit(normalize_or_throw(Ket{alpha, beta}));
}

Operator pauli_x() {
    return Operator(Matrix{{0, 1}, {1, 0}});
}

Operator pauli_z() {
    return Operator(Matrix{{1, 0}, {0, -1}});
}

Operator pauli_xz() {
    return Operator(Matrix{{0, -1}, {1, 0}});
}

Operator hadamard() {
    const double s = 1 / std::sqrt(2.0);
    return Operator(Matrix{{s, s}, {s, -s}});
}

Operator cnot() {
    return Operator(Matrix{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    });
}

Operator correction_unitary(int outcome) {
    require_outcome(outcome);
    switch (outcome) {
        case 1:
            return Operator::identity(SpaceLabel(2));
        case 2:
            return pauli_x();
        case 3:
            return pauli_z();
        default:
            return pauli_xz();
    }
}

Operator teleport_matrix() {
    const int pattern[8][8] = {
        {1, 0, 0, 0, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 0, 0, 1},
        {0, 0, 1, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 1, 0, 0},
        {1, 0, 0, 0, 0, 0, -1, 0},
        {0, 1, 0, 0, 0, 0, 0, -1},
        {0, 0, 1, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, -1, 0, 0},
    };
    const double s = 1 / std::sqrt(2.0);
    Matrix t(8, 8);
    for (size_t r = 0; r < 8; r++) {
        for (size_t c = 0; c < 8; c++) {
            t(r, c) = s * pattern[r][c];
        }
    }
    return Operator(std::move(t));
}

TensorElement bell_phi_plus() {
    const double s = 1 / std::sqrt(2.0);
    return TensorElement(2, 2, {s, 0, 0, s});
}

TensorElement teleport_apply(const Qubit &xi) {
    TensorElement psi0 = kron(xi.ket(), bell_phi_plus().as_ket());
    return apply(teleport_matrix(), psi0).regroup(4);
}

TeleportSteps teleport_trace(const Qubit &xi) {
    TensorElement psi0 = kron(xi.ket(), bell_phi_plus().as_ket());
    Operator id2 = Operator::identity(SpaceLabel(2));
    Operator id4 = Operator::identity(SpaceLabel(4));
    TensorElement psi1 = apply(kron_op(cnot(), id2), psi0.regroup(4));
    TensorElement psi2 = apply(kron_op(hadamard(), id4), psi1);
    return TeleportSteps{psi0, psi1, psi2};
}

std::array<double, 4> outcome_probabilities(const TensorElement &psi2) {
    if (psi2.size() != 8) {
        throw SpaceMismatchError("outcome_probabilities: expected a state of dimension 8, got " +
                                 std::to_string(psi2.size()));
    }
    double total = psi2.sigma();
    if (total == 0) {
        throw std::invalid_argument("measure_alice: zero-norm state");
    }
    std::array<double, 4> p{};
    for (size_t i = 0; i < 4; i++) {
        double b = euclidean_norm(psi2.coords().subspan(2 * i, 2)) / total;
        p[i] = b * b;
    }
    return p;
}

Measurement collapse(const TensorElement &psi2, int outcome) {
    require_outcome(outcome);
    std::array<double, 4> p = outcome_probabilities(psi2);
    if (p[outcome - 1] == 0) {
        throw std::invalid_argument("collapse: outcome " + std::to_string(outcome) + " has probability zero");
    }
    auto block = psi2.coords().subspan(2 * static_cast<size_t>(outcome - 1), 2);
    Ket raw = normalize_or_throw(Ket{block[0], block[1]});
    Measurement m{outcome, {(outcome - 1) >> 1, (outcome - 1) & 1}, raw, p};
    return m;
}

Measurement measure_alice(const TensorElement &psi2, uint64_t seed) {
    std::array<double, 4> p = outcome_probabilities(psi2);
    std::mt19937_64 rng(seed);
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    int chosen = 0;
    double cumulative = 0;
    for (int i = 0; i < 4; i++) {
        if (p[i] == 0) {
            continue;
        }
        chosen = i + 1;
        cumulative += p[i];
        if (u < cumulative) {
            break;
        }
    }
    // Rounding can leave cumulative slightly below 1; the last nonzero block
    // absorbs the remainder.
    return collapse(psi2, chosen);
}

Qubit bob_correct(int outcome, const Ket &bob_raw) {
    Operator inverse = adjoint(correction_unitary(outcome));
    return Qubit(normalize_or_throw(apply(inverse, bob_raw)));
}

double fidelity(const Qubit &xi, const Qubit &eta) {
    return std::abs(inner_phys(xi.ket(), eta.ket()));
}

TeleportTrace teleport(const Qubit &xi, uint64_t seed) {
    TeleportSteps steps = teleport_trace(xi);
    Measurement m = measure_alice(steps.psi2, seed);
    Qubit bob = bob_correct(m.outcome, m.bob_raw);
    double f = fidelity(xi, bob);
    return TeleportTrace{steps.psi0, steps.psi1, steps.psi2, m, bob, f};
}

TeleportTrace teleport_forced(const Qubit &xi, int outcome) {
    TeleportSteps steps = teleport_trace(xi);
    Measurement m = collapse(steps.psi2, outcome);
    Qubit bob = bob_correct(m.outcome, m.bob_raw);
    double f = fidelity(xi, bob);
    return TeleportTrace{steps.psi0, steps.psi1, steps.psi2, m, bob, f};
}

NoCloningWitness no_cloning_witness(const Ket &x, const Ket &y, const Ket &e) {
    require_same_space(x.space(), y.space(), "no_cloning_witness");
    require_same_space(x.space(), e.space(), "no_cloning_witness");
    require_unit(x, "x");
    require_unit(y, "y");
    require_unit(e, "e");
    NoCloningWitness w{};
    w.overlap = std::abs(inner_phys(x, y));
    w.lhs = std::abs(inner_phys(kron(x, x).as_ket(), kron(y, y).as_ket()));
    w.rhs = std::abs(inner_phys(kron(x, e).as_ket(), kron(y, e).as_ket()));
    w.cloneable = std::abs(w.lhs - w.rhs) < 1e-12;
    return w;
}

}  // namespace braket
