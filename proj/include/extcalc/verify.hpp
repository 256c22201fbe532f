// Verification suites: independent cross-checks of the closed-form tables
// against the finite-field homology engine and against each other.
//
// Each suite runs a fixed deterministic grid (randomized suites use a fixed
// seed) and reports the number of checks performed plus a description of
// every failure.  The CLI `verify` command and the acceptance harness both
// run these.
#pragma once

#include <string>
#include <vector>

#include "extcalc/checked.hpp"

namespace extcalc {

struct SuiteResult {
    std::string name;
    Dim checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Koszul and dual Koszul complexes are exact: p in {2,3}, n <= 3,
/// 1 <= D <= 6.
SuiteResult verify_koszul();

/// de Rham homology matches the Cartier prediction on the same grid
/// (D from 0).
SuiteResult verify_derham();

/// Generalized Koszul homology equals the kernel/cokernel prediction for
/// pseudo-random graded maps over F_2 and F_3, powers d <= 3.
SuiteResult verify_genkoszul();

/// The graded dimension identity between the two power-algebra models of
/// the twist-lowering data: for p in {2,3}, 1 <= j <= r <= 3, d <= 4 and all
/// internal degrees n <= 40,
///   sum_s dim[S^{d-s}(V at j-1) ⊗ Λ^s(W at j-1)]^(n - s*p^(r-j+1))
///     = sum_s dim[S^{d-s}(C at j) ⊗ Λ^s(K at j)]^(n - s*p^(r-j)).
SuiteResult verify_basic_identity();

/// Duality (coh <= 30, h <= 2, p in {2,3}): every strict polynomial query
/// on the supported-pair grid (single atoms, twists <= 2, powers <= 3, plus
/// two-factor words) has the same coefficients as its dualized query, and
/// the coefficient table of every supported stable family equals the table
/// of its dual family with source/target indices exchanged.
SuiteResult verify_duality();

/// The closed-form presentations over F_q reproduce the stable-data
/// assembly coefficient by coefficient (p = 2, N in {1,2}, h < N, all four
/// presentation pairs, indices <= 6, coh <= 20).
SuiteResult verify_family_vs_assembly();

/// All suites in a fixed order.
std::vector<SuiteResult> verify_all();

/// Runs the suite with the given CLI name ("koszul", "derham", "genkoszul",
/// "cor47", "duality", "family-vs-assembly"); throws InvalidParams for
/// unknown names.
SuiteResult run_suite(const std::string& name);

/// The CLI suite names in canonical order, excluding "all".
const std::vector<std::string>& suite_names();

} // namespace extcalc
