// verify.hpp -- the all-up verification pipeline behind `verify-all` and the
// acceptance suite. Each check runs one themed battery and reports pass/fail
// with a short detail line and its wall-clock cost.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schubaut/weyl.hpp"

namespace schubaut {

struct VerifyOptions {
    bool deep = false;                          // add D5/E6 to the exhaustive oracle
    std::size_t cap = kDefaultEnumerationCap;   // coset enumeration bound
    int dn_max = 10;                            // D_n sweep upper rank
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

CheckResult check_classification();
CheckResult check_highest_roots();
CheckResult check_extremal_lengths();
CheckResult check_tabulated_words();
CheckResult check_lemma_suites(int dn_max = 10);
CheckResult check_witness_verdicts(int dn_max = 10);
CheckResult check_search_oracle_default(std::size_t cap = kDefaultEnumerationCap);
CheckResult check_search_oracle_deep(std::size_t cap = kDefaultEnumerationCap);
CheckResult check_minuscule_obstructions();
CheckResult check_b2_remark();
CheckResult check_property_suites();

// Runs every battery (the deep oracle only under options.deep).
std::vector<CheckResult> verify_all(const VerifyOptions& options);

}  // namespace schubaut
