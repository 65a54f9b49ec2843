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

#ifndef BRAKET_RANDOM_H
#define BRAKET_RANDOM_H

#include <cstdint>
#include <random>

#include "braket/matrix.h"
#include "braket/operators.h"
#include "braket/quantum.h"
#include "braket/spaces.h"

namespace braket {

/// Instance generators for property checks. All draws come from the caller's
/// engine, so a fixed seed gives a fixed sequence of instances.

/// SplitMix64 finalizer over (root, index): independent per-trial seeds.
uint64_t derive_seed(uint64_t root, uint64_t index);

/// Real and imaginary parts i.i.d. standard normal.
Complex random_complex(std::mt19937_64 &rng);
Ket random_ket(std::mt19937_64 &rng, SpaceLabel space);
/// Uniform on the unit sphere.
Ket random_unit_ket(std::mt19937_64 &rng, SpaceLabel space);
Qubit random_qubit(std::mt19937_64 &rng);
Matrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols);
Operator random_operator(std::mt19937_64 &rng, SpaceLabel domain, SpaceLabel codomain);
/// Gram-Schmidt orthonormalization of a Gaussian matrix.
Matrix random_unitary(std::mt19937_64 &rng, size_t n);

}  // namespace braket

#endif
