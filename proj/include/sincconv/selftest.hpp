// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_SELFTEST_HPP
#define SINCCONV_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sincconv {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full property suite over every module: special-function oracles,
// transform identities, basis and operator properties, matrix-function
// cross-checks, spectrum diagnostics, benchmark reference validation, and the
// convergence-rate fits. Prints one PASS/FAIL line per check to `progress`
// when given. Deterministic (fixed RNG seeds).
std::vector<CheckResult> run_selftest(std::ostream* progress = nullptr);

} // namespace sincconv

#endif
