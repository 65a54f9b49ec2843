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

#include "cli.h"

#include <cstdlib>
#include <iomanip>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "braket/braket.h"
#include "format.h"
#include "verify.h"

namespace braket::cli {

namespace {

constexpr double kFidelityTol = 1e-9;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TeleportArgs {
    std::string state = "random";
    uint64_t seed = 0;
    bool show_steps = false;
    bool json = false;
};

struct VerifyArgs {
    std::string suite;
    int trials = 100;
    uint64_t seed = 1;
    std::optional<double> tol;
    bool json = false;
};

struct KronArgs {
    std::string x;
    std::string y;
    bool swap = false;
    bool json = false;
};

Qubit parse_state(const std::string &state, uint64_t seed) {
    if (state == "random") {
        std::mt19937_64 rng(seed);
        return random_qubit(rng);
    }
    std::vector<Complex> coords;
    try {
        coords = parse_complex_list(state);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (coords.size() != 2) {
        throw UsageError("--state needs two coordinates, got " + std::to_string(coords.size()));
    }
    try {
        return Qubit::normalized(coords[0], coords[1]);
    } catch (const std::invalid_argument &) {
        throw UsageError("--state must be nonzero");
    }
}

int cmd_teleport(const TeleportArgs &a, std::ostream &out) {
    Qubit xi = parse_state(a.state, a.seed);
    TeleportTrace trace = teleport(xi, a.seed);
    bool ok = trace.fidelity >= 1 - kFidelityTol;

    if (a.json) {
        nlohmann::json j = to_json(trace);
        j["state"] = to_json(xi.ket());
        j["seed"] = a.seed;
        out << j.dump(2) << "\n";
        return ok ? kExitOk : kExitFailure;
    }

    out << "state:         " << format_vector(xi.ket().coords()) << "\n";
    if (a.show_steps) {
        out << "psi0:          " << format_vector(trace.psi0.coords()) << "\n";
        out << "psi1:          " << format_vector(trace.psi1.coords()) << "\n";
        out << "psi2:          " << format_vector(trace.psi2.coords()) << "\n";
    }
    const Measurement &m = trace.measurement;
    out << "outcome:       " << m.outcome << " (bits " << m.bits[0] << m.bits[1] << ")\n";
    out << "bob_raw:       " << format_vector(m.bob_raw.coords()) << "\n";
    out << "bob_corrected: " << format_vector(trace.bob_corrected.ket().coords()) << "\n";
    out << "fidelity:      " << format_double(trace.fidelity) << "\n";
    return ok ? kExitOk : kExitFailure;
}

double resolve_tolerance(const std::optional<double> &flag) {
    if (flag) {
        return *flag;
    }
    const char *env = std::getenv("BRAKET_HS_TOL");
    if (env == nullptr || *env == '\0') {
        return 1e-12;
    }
    char *end = nullptr;
    double tol = std::strtod(env, &end);
    if (*end != '\0' || !(tol > 0)) {
        throw UsageError(std::string("BRAKET_HS_TOL is not a positive number: '") + env + "'");
    }
    return tol;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    if (!is_known_suite(a.suite)) {
        throw UsageError("unknown suite '" + a.suite + "'");
    }
    if (a.trials < 0) {
        throw UsageError("--trials must be nonnegative");
    }
    VerifyOptions options{a.trials, a.seed, resolve_tolerance(a.tol)};
    if (!(options.tol > 0)) {
        throw UsageError("--tol must be positive");
    }
    std::vector<CheckResult> results = run_suite(a.suite, options);
    bool all_passed = true;
    for (const auto &r : results) {
        all_passed = all_passed && r.passed;
    }

    if (a.json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &r : results) {
            checks.push_back({{"name", r.name},
                              {"passed", r.passed},
                              {"max_residual", r.max_residual},
                              {"tolerance", r.tolerance},
                              {"instances", r.instances}});
        }
        nlohmann::json j{{"suite", a.suite},     {"trials", a.trials},   {"seed", a.seed},
                         {"checks", checks},     {"passed", all_passed}};
        out << j.dump(2) << "\n";
        return all_passed ? kExitOk : kExitFailure;
    }

    int index = 1;
    for (const auto &r : results) {
        out << std::setw(3) << index++ << ". " << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(42)
            << r.name << std::right << " max_residual=" << format_double(r.max_residual)
            << " tol=" << format_double(r.tolerance) << " n=" << r.instances << "\n";
    }
    out << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
    return all_passed ? kExitOk : kExitFailure;
}

int cmd_kron(const KronArgs &a, std::ostream &out) {
    std::vector<Complex> x;
    std::vector<Complex> y;
    try {
        x = parse_complex_list(a.x);
        y = parse_complex_list(a.y);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    TensorElement t = kron(Ket(x), Ket(y));
    std::optional<TensorElement> swapped;
    if (a.swap) {
        // K_{n,m} maps x (x) y in C^m (x) C^n to y (x) x.
        Ket flat = apply(commutation_matrix(y.size(), x.size()), t.as_ket());
        swapped = TensorElement::from_ket(flat, y.size());
    }

    if (a.json) {
        nlohmann::json j{{"kron", to_json(t)}};
        if (swapped) {
            j["swap"] = to_json(*swapped);
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "kron: " << format_vector(t.coords()) << "\n";
    if (swapped) {
        out << "swap: " << format_vector(swapped->coords()) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Finite-dimensional bra-ket, Hilbert-Schmidt and tensor product toolkit", "braket"};
    app.require_subcommand(1);

    TeleportArgs teleport_args;
    auto *teleport_cmd = app.add_subcommand("teleport", "Run the one-qubit teleportation protocol");
    teleport_cmd->add_option("--state", teleport_args.state, "Two complex coordinates \"a,b\" or \"random\"");
    teleport_cmd->add_option("--seed", teleport_args.seed, "Seed for the measurement (and the random state)");
    teleport_cmd->add_flag("--show-steps", teleport_args.show_steps, "Print psi0, psi1 and psi2");
    teleport_cmd->add_flag("--json", teleport_args.json, "Emit JSON");

    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify", "Check the algebraic invariants on random instances");
    verify_cmd->add_option("suite", verify_args.suite, "spaces, operators, hs, tensor, quantum or all")->required();
    verify_cmd->add_option("--trials", verify_args.trials, "Random instances per check");
    verify_cmd->add_option("--seed", verify_args.seed, "Root seed");
    verify_cmd->add_option("--tol", verify_args.tol, "Tolerance for exact identities (default 1e-12, env BRAKET_HS_TOL)");
    verify_cmd->add_flag("--json", verify_args.json, "Emit JSON");

    KronArgs kron_args;
    auto *kron_cmd = app.add_subcommand("kron", "Kronecker product of two coordinate vectors");
    kron_cmd->add_option("x", kron_args.x, "Comma-separated complex coordinates")->required();
    kron_cmd->add_option("y", kron_args.y, "Comma-separated complex coordinates")->required();
    kron_cmd->add_flag("--swap", kron_args.swap, "Also print the commutation-matrix image");
    kron_cmd->add_flag("--json", kron_args.json, "Emit JSON");

    std::vector<const char *> argv{"braket"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*teleport_cmd) {
            return cmd_teleport(teleport_args, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_args, out);
        }
        return cmd_kron(kron_args, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace braket::cli
