#pragma once

// Deterministic property suites over exhaustive enumeration windows.
// Shared between `rn_cli check` and the acceptance tests.

#include <string>
#include <vector>

#include "rn/number.hpp"

namespace rn {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // first counterexample, when failing
};

// Core ordering invariants: oracle adjacency, inverse pair, negation
// symmetry, step structure, value injectivity, round-to-nearest vs the
// linear-scan oracle, hierarchy cross-level consistency.
std::vector<CheckResult> check_order(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max);

// Arithmetic invariants: absorption, commutativity, multiplication oracle
// equivalence, bounded addition error, sign rules, C_n single rounding.
std::vector<CheckResult> check_arith(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max);

// Space invariants: order-preserving embedding, inverse transforms,
// scale-jump identity, scale invariance, translation/jump ratio,
// expansion monotonicity, singularity census, fixed origin.
std::vector<CheckResult> check_space(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace rn
