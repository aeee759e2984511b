// SPDX-License-Identifier: Apache-2.0
//
// Self-verification suites. Each suite re-derives one family of structural
// identities from scratch and reports a single pass/fail result with a
// check count (or the first counterexample found).
//
// Suites and default scopes:
//   examples       fixed rank-2 chart (word 1,2,1): quiver, potential and
//                  decoration components, and the four chart maps are
//                  compared against hand-written expected values,
//                  character for character in the canonical rendering;
//   factorization  the eight potential/decoration factorization identities
//                  through the four chart maps (A2 and A3: every word;
//                  D4: three words);
//   unimodular     the four chart maps have determinant +-1 (every A3 word);
//   cmm            the closed-form lattice map equals the composed route,
//                  plain and dual, and maps the graded string cone(s) onto
//                  the graded Lusztig cone(s) (A2 and A3, every word);
//   transforms     the four cone-transport statements between the graded,
//                  GHKK and decoration cones (A2 and A3, every word);
//   ghkk-route     negative potential components recomputed through seed
//                  mutation agree with the closed form (A2 and A3);
//   polytopes      lattice-point counts of weight slices match the Weyl
//                  dimension formula (string and Lusztig kinds);
//   crystal        the star involution / eps identity on Lusztig data and
//                  stability of the string cone under the starred lowering
//                  operators (A2 exhaustive, A3 sampled);
//   theorem-a      the two factorizations of the comparison map agree, the
//                  decoration is the potential pulled back through it, and
//                  the map intertwines chart transitions (every A3 word);
//   cycles         closed move-graph walks of length <= 6 compose to the
//                  identity transition, both transition kinds (A3).
//
// An optional type filter ("A2", "A3", "D4", ...) restricts a suite to one
// Cartan type; large types run on a three-word spot-check scope.

#pragma once

#include <string>
#include <vector>

namespace stringcone {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The ten suite names, in canonical order.
const std::vector<std::string>& verify_suites();

// Runs one suite (a name from verify_suites()). Unknown names throw Error.
VerifyResult run_verify(const std::string& suite, const std::string& type_filter = "");

// Runs every suite in canonical order.
std::vector<VerifyResult> run_verify_all(const std::string& type_filter = "");

} // namespace stringcone
