// schubert.hpp -- stabilizer parabolics of Schubert varieties and the
// Aut^0 faithfulness criterion.
//
// For w in W^J the stabilizer of X_{P_J}(w) is the standard parabolic on
// {i : w^{-1}(alpha_i) < 0 or w^{-1}(alpha_i) in R_J^+}. The natural map
// P_w -> Aut^0 is an isomorphism (simply-laced) exactly when w^{-1}(alpha_0)
// is negative; "Aut^0 equals P_target" is read in-engine as stabilizer =
// {target} together with that faithfulness test.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schubaut/root_system.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut {

struct WitnessReport {
    Parabolic ambient;
    WeylElement element;
    std::vector<int> stabilizer;
    bool in_min_reps = false;  // w in W^J
    bool faithful = false;     // w^{-1}(alpha_0) < 0
    bool verdict = false;
    std::vector<std::string> failed;  // conditions that broke the verdict
};

// {i : w^{-1}(alpha_i) < 0 or w^{-1}(alpha_i) in R_J^+}. Requires w in W^J;
// otherwise throws naming the failing alpha in J.
std::vector<int> stabilizer_simples(const RootSystem& rs, const WeylElement& w,
                                    const Parabolic& J);

bool is_faithful(const RootSystem& rs, const WeylElement& w);

WitnessReport verify_witness(const RootSystem& rs, int target, const Parabolic& J,
                             const WeylElement& w);

// Exhaustive witness search: every nonempty J subset of S in (cardinality,
// lexicographic) order, every w in W^J, collecting verdict-true pairs.
// Each coset enumeration is bounded by cap.
std::vector<std::pair<Parabolic, WeylElement>> search_witnesses(
    const RootSystem& rs, int target, std::size_t cap = kDefaultEnumerationCap);

// Same exhaustive scan, one enumeration pass for all targets at once:
// entry [r-1] holds the witnesses whose stabilizer is exactly {r}.
std::vector<std::vector<std::pair<Parabolic, WeylElement>>> search_witnesses_all_targets(
    const RootSystem& rs, std::size_t cap = kDefaultEnumerationCap);

// Theorem-level candidate check for a minuscule index r: the only possible
// witness element is the minimal representative of w_0 in W^{S\{alpha_
// sigma(r)}}; returns true when no nonempty ambient J gives it stabilizer
// exactly {r}. Runs without enumerating W (2^rank subset checks).
bool minuscule_obstruction(const RootSystem& rs, int r);

}  // namespace schubaut
