// classify.hpp -- minuscule / cominuscule classification and the
// parabolic-longest-element images that characterise them.

#pragma once

#include <vector>

#include "schubaut/root_system.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut {

struct MinusculeReport {
    int index = 0;
    bool minuscule = false;
    bool cominuscule = false;
    Root w0J_image;  // w_{0, S\{alpha_r}}(alpha_r)
};

// Definitional scan: <omega_r, beta^vee> <= 1 for every positive root beta.
// Deliberately not the coefficient shortcut, so the simply-laced equivalence
// with is_cominuscule stays a genuine cross-check.
bool is_minuscule(const RootSystem& rs, int r);

// Coefficient of alpha_r in the highest root equals 1.
bool is_cominuscule(const RootSystem& rs, int r);

// w_{0, S\{alpha_r}}(alpha_r). Equals the highest root exactly when omega_r
// is minuscule, and highest - alpha_r at the adjoint node of D/E types.
Root parabolic_longest_image(const RootSystem& rs, int r);

// Enumerates W^{S\{alpha_r}} (r minuscule) and confirms exactly one element
// sends the highest root negative, namely the minimal representative of w_0.
bool check_minimal_negative_rep(const RootSystem& rs, int r,
                                std::size_t cap = kDefaultEnumerationCap);

std::vector<MinusculeReport> classify_all(const RootSystem& rs);

}  // namespace schubaut
