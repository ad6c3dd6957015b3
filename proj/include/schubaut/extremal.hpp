// extremal.hpp -- minimal-length transporters into the highest root.
//
// For a root alpha in the highest-root orbit there is a unique element u of
// minimal length with u(alpha) = alpha_0 (equivalently u^{-1}(alpha_0) =
// alpha). Its length for simple alpha is g - 2 with g the dual Coxeter
// number, and the companion v = u s_alpha with v^{-1}(alpha_0) = -alpha has
// length ht(alpha_0). Both are found by breadth-first search on the root
// graph (vertices the roots, edges beta ~ s_i(beta)), which keeps the search
// linear in the number of roots instead of exponential in the group.

#pragma once

#include "schubaut/root_system.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut {

struct TransporterResult {
    Root target;
    WeylElement element;  // carries a reduced word
    int length = 0;
    // All shortest parent-pointer reconstructions agreed on one element.
    // False would contradict the uniqueness theorem; the lexicographically
    // least candidate is returned in that case so the discrepancy surfaces
    // in the acceptance suite instead of aborting.
    bool unique = true;
};

// Dual Coxeter number g = 1 + sum of the dual highest-root coefficients;
// for simply-laced types this is 1 + ht(alpha_0).
int dual_coxeter(const RootSystem& rs);

// Minimal-length u with u(target) = alpha_0. Throws std::invalid_argument if
// target is not a root or lies outside the W-orbit of the highest root
// (short roots of B2).
TransporterResult minimal_transporter(const RootSystem& rs, const Root& target);

// Minimal-length v with v^{-1}(alpha_0) = -alpha_i; equals
// minimal_transporter(alpha_i).element * s_i and has length ht(alpha_0).
TransporterResult minimal_negator(const RootSystem& rs, int simple);

}  // namespace schubaut
