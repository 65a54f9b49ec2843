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

#ifndef BRAKET_QUANTUM_H
#define BRAKET_QUANTUM_H

#include <array>
#include <cstdint>

#include "braket/operators.h"
#include "braket/spaces.h"
#include "braket/tensor.h"

namespace braket {

/// A unit vector of C^2.
class Qubit {
   public:
    /// Throws std::invalid_argument unless ||(alpha, beta)|| = 1 within 1e-9;
    /// the stored state is renormalized exactly.
    Qubit(Complex alpha, Complex beta);
    explicit Qubit(const Ket &ket);

    /// Normalizes any nonzero pair. Throws std::invalid_argument for zero.
    static Qubit normalized(Complex alpha, Complex beta);

    const Ket &ket() const { return ket_; }
    Complex alpha() const { return ket_[0]; }
    Complex beta() const { return ket_[1]; }

   private:
    Ket ket_;
};

// Gate constants, exact as printed.
Operator pauli_x();
Operator pauli_z();
/// sigma_x sigma_z = ((0, -1), (1, 0)).
Operator pauli_xz();
Operator hadamard();
Operator cnot();

/// T_1 = Id, T_2 = sigma_x, T_3 = sigma_z, T_4 = sigma_x sigma_z. outcome in 1..4.
Operator correction_unitary(int outcome);

/// The 8x8 teleportation matrix, written out entry by entry.
Operator teleport_matrix();

/// phi+ = (1, 0, 0, 1)^T / sqrt(2) as an element of C^2 (x) C^2.
TensorElement bell_phi_plus();

/// T (xi (x) phi+), split as C^4 (x) C^2 so that block i is (1/2) T_i xi.
TensorElement teleport_apply(const Qubit &xi);

struct TeleportSteps {
    /// xi (x) phi+, split C^2 (x) C^4.
    TensorElement psi0;
    /// (U_CN (x) Id_2) psi0, split C^4 (x) C^2.
    TensorElement psi1;
    /// (H_1 (x) Id_4) psi1 = T psi0, split C^4 (x) C^2.
    TensorElement psi2;
};

TeleportSteps teleport_trace(const Qubit &xi);

struct Measurement {
    /// 1..4
    int outcome;
    /// binary(outcome - 1): (b1, b2)
    std::array<int, 2> bits;
    /// Bob's qubit after the collapse, block `outcome` of psi2 renormalized.
    Ket bob_raw;
    std::array<double, 4> probabilities;
};

std::array<double, 4> outcome_probabilities(const TensorElement &psi2);

/// Samples Alice's two-qubit outcome from psi2 (total dimension 8).
///
/// Deterministic in `seed`: one draw u = (mt19937_64(seed)() >> 11) * 2^-53 is
/// mapped through the inverse CDF of the four block probabilities ||block_i||^2.
/// Throws std::invalid_argument for a zero state.
Measurement measure_alice(const TensorElement &psi2, uint64_t seed);

/// The post-measurement state for a given outcome, bypassing the sampler.
Measurement collapse(const TensorElement &psi2, int outcome);

/// Applies T_outcome^{-1} = T_outcome^* to Bob's raw qubit.
Qubit bob_correct(int outcome, const Ket &bob_raw);

/// |<xi|eta>|.
double fidelity(const Qubit &xi, const Qubit &eta);

struct TeleportTrace {
    TensorElement psi0;
    TensorElement psi1;
    TensorElement psi2;
    Measurement measurement;
    Qubit bob_corrected;
    double fidelity;
};

TeleportTrace teleport(const Qubit &xi, uint64_t seed);
TeleportTrace teleport_forced(const Qubit &xi, int outcome);

struct NoCloningWitness {
    /// |<x|y>|
    double overlap;
    /// |<x (x) x | y (x) y>| = overlap^2
    double lhs;
    /// |<x (x) e | y (x) e>| = overlap
    double rhs;
    /// |lhs - rhs| < 1e-12, which happens exactly when overlap is 0 or 1.
    bool cloneable;
};

/// Compares the overlaps a cloning unitary would have to preserve. x, y, e must
/// be unit vectors (within 1e-9) of one plain space.
NoCloningWitness no_cloning_witness(const Ket &x, const Ket &y, const Ket &e);

}  // namespace braket

#endif
