// demazure.hpp -- group-ring characters of the weight lattice and the
// Demazure operators acting on them.
//
// A Character is a finite integer combination of formal exponentials e^lambda
// keyed by fundamental-weight coordinates; multiplicities may go negative for
// virtual characters. The one-step operator D_i sends e^lambda with
// k = <lambda, alpha_i^vee> to
//      sum_{j=0..k}  e^{lambda - j alpha_i}        (k >= 0)
//      0                                           (k = -1)
//      -sum_{j=1..-k-1} e^{lambda + j alpha_i}     (k <= -2)
// and composes along reduced words only: the composite depends on the group
// element, not the word, precisely for reduced words.

#pragma once

#include <map>

#include "schubaut/root_system.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut {

class Character {
public:
    Character() = default;

    static Character monomial(const Weight& lambda, long long mult = 1) {
        Character c;
        c.add(lambda, mult);
        return c;
    }

    // Canonical form: zero multiplicities are erased on the spot.
    Character& add(const Weight& lambda, long long mult) {
        if (mult == 0) return *this;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(lambda, mult);
        } else if ((it->second += mult) == 0) {
            terms_.erase(it);
        }
        return *this;
    }

    const std::map<Weight, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    long long dimension() const {
        long long d = 0;
        for (const auto& [w, m] : terms_) d += m;
        return d;
    }

    friend Character operator+(const Character& a, const Character& b) {
        Character out = a;
        for (const auto& [w, m] : b.terms_) out.add(w, m);
        return out;
    }
    friend Character operator-(const Character& a, const Character& b) {
        Character out = a;
        for (const auto& [w, m] : b.terms_) out.add(w, -m);
        return out;
    }

    friend bool operator==(const Character&, const Character&) = default;

private:
    std::map<Weight, long long> terms_;
};

Character demazure_step(const RootSystem& rs, int i, const Character& chi);

// Composes demazure_step right-to-left along the word, which must be reduced
// (rejected otherwise to avoid silently computing a different operator).
Character demazure_apply(const RootSystem& rs, const Word& word, const Character& chi);

// s_i(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, int i, const Weight& lambda);

// Character of g/p_J: sum of e^beta over beta in R^+ \ R_J^+.
Character module_character(const RootSystem& rs, const Parabolic& J);

// Sum over the filtration weights beta of D_{reduced_word(w)} e^beta. In
// strict mode asserts w in W^J and a nonnegative result.
Character h0_module_character(const RootSystem& rs, const WeylElement& w, const Parabolic& J,
                              bool strict = true);

// sum_{beta in R} e^beta + rank * e^0.
Character adjoint_character(const RootSystem& rs);

}  // namespace schubaut
