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

#ifndef BRAKET_TOOLS_VERIFY_H
#define BRAKET_TOOLS_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace braket::cli {

struct CheckResult {
    std::string name;
    double max_residual = 0;
    double tolerance = 0;
    /// Number of instances the check ran on.
    int instances = 0;
    bool passed = true;
};

struct VerifyOptions {
    int trials = 100;
    uint64_t seed = 1;
    /// Tolerance for exact algebraic identities. Checks that go through power
    /// iteration or sampling keep their own fixed tolerances.
    double tol = 1e-12;
};

const std::vector<std::string> &suite_names();
bool is_known_suite(const std::string &name);

/// Runs one suite ("spaces", "operators", "hs", "tensor", "quantum") or "all".
/// Trial t of a suite draws its instances from an mt19937_64 seeded by
/// derive_seed(seed ^ salt, t), with a fixed salt per suite.
std::vector<CheckResult> run_suite(const std::string &name, const VerifyOptions &options);

}  // namespace braket::cli

#endif
