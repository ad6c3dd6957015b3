// constructions.hpp -- the explicit witness elements for D_n and E6/E7/E8
// and the registry of root-image identity suites that validate them.
//
// For D_n the element w_i (2 <= i <= n-2) is assembled from the palindromic
// u_i = s_i ... s_{n-2} s_{n-1} s_n s_{n-2} ... s_i and the minimal negator
// v_{i-1}; for the E types w_i is a product of two parabolic longest
// elements with the tabulated negator word. Each suite evaluates a family of
// displayed root images with the Weyl engine and reports expected vs
// computed; tabulation discrepancies that do not affect any verdict are
// carried as notes rather than failing checks.

#pragma once

#include <string>
#include <vector>

#include "schubaut/extremal.hpp"
#include "schubaut/root_system.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut {

struct Construction {
    int target = 0;      // the simple index whose minimal parabolic is realised
    Parabolic ambient;   // J with the Schubert variety living in G/P_J
    WeylElement element;
};

// u_i = s_i s_{i+1} ... s_{n-2} s_{n-1} s_n s_{n-2} ... s_{i+1} s_i, valid
// for 1 <= i <= n-2. Self-inverse.
Word dn_u_word(int n, int i);

// v_i = (s_2 ... s_{n-2} s_{n-1} s_n s_{n-2} ... s_{i+1})(s_1 ... s_i),
// valid for 1 <= i <= n-3; a reduced word for the minimal negator of alpha_i.
Word dn_v_word(int n, int i);

// The tabulated reduced words for the minimal negators used by the E-type
// constructions: targets alpha_2 (E6, 11 letters), alpha_4 (E7, 17) and
// alpha_6 (E8, 29).
Word tabulated_negator_word(const CartanType& type);

// D_n witness element for a non-minuscule node, 2 <= i <= n-2; ambient {i}.
Construction build_dn(const RootSystem& rs, int i);

// E-type witness element; admissible targets are the non-minuscule nodes
// (E6: 2..5, E7: 1..6, E8: 1..8). Ambient is {4}/{3}/{7} respectively.
Construction build_e(const RootSystem& rs, int i);

struct LemmaCheck {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct LemmaSuiteResult {
    std::string suite_id;
    std::vector<LemmaCheck> checks;
    std::vector<std::string> notes;
    bool all_pass = false;
};

// Registered suite ids. The D.* suites take the rank as a parameter; the
// E*.* suites are fixed.
std::vector<std::string> lemma_suite_ids();

// Evaluates one suite. dn_rank selects the rank for D.* suites (>= 4);
// ignored for E suites. Unknown ids are rejected.
LemmaSuiteResult verify_lemma_suite(const std::string& suite_id, int dn_rank = 4);

// Every suite: D.* for ranks 4..dn_max_rank, then the E suites.
std::vector<LemmaSuiteResult> run_all_lemma_suites(int dn_max_rank = 10);

}  // namespace schubaut
