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

#include "braket/random.h"

#include <cmath>

namespace braket {

uint64_t derive_seed(uint64_t root, uint64_t index) {
    uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Complex random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double re = normal(rng);
    double im = normal(rng);
    return {re, im};
}

Ket random_ket(std::mt19937_64 &rng, SpaceLabel space) {
    std::vector<Complex> c(space.dim());
    for (auto &z : c) {
        z = random_complex(rng);
    }
    return Ket(space, std::move(c));
}

Ket random_unit_ket(std::mt19937_64 &rng, SpaceLabel space) {
    while (true) {
        Ket k = random_ket(rng, space);
        double n = norm(k);
        if (n > 1e-6) {
            return k.scaled(1.0 / n);
        }
    }
}

Qubit random_qubit(std::mt19937_64 &rng) {
    return Qubit(random_unit_ket(rng, SpaceLabel(2)));
}

Matrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = random_complex(rng);
        }
    }
    return m;
}

Operator random_operator(std::mt19937_64 &rng, SpaceLabel domain, SpaceLabel codomain) {
    return Operator(domain, codomain, random_matrix(rng, codomain.dim(), domain.dim()));
}

Matrix random_unitary(std::mt19937_64 &rng, size_t n) {
    Matrix q = random_matrix(rng, n, n);
    // Modified Gram-Schmidt on the columns, done twice for orthogonality to
    // machine precision.
    for (int pass = 0; pass < 2; pass++) {
        for (size_t c = 0; c < n; c++) {
            for (size_t prev = 0; prev < c; prev++) {
                Complex proj = 0;
                for (size_t r = 0; r < n; r++) {
                    proj += std::conj(q(r, prev)) * q(r, c);
                }
                for (size_t r = 0; r < n; r++) {
                    q(r, c) -= proj * q(r, prev);
                }
            }
            double len = euclidean_norm(q.column_entries(c));
            for (size_t r = 0; r < n; r++) {
                q(r, c) /= len;
            }
        }
    }
    return q;
}

}  // namespace braket
