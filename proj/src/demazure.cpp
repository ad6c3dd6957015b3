// demazure.cpp

#include "schubaut/demazure.hpp"

#include <stdexcept>

namespace schubaut {

namespace {

// lambda - j * alpha_i in fundamental-weight coordinates; the fw coordinates
// of alpha_i are the i-th Cartan column.
Weight shift_by_alpha(const RootSystem& rs, const Weight& lambda, int i, int j) {
    Weight out = lambda;
    for (int r = 1; r <= rs.rank(); ++r) out.fw[r - 1] -= j * rs.cartan(r, i);
    return out;
}

}  // namespace

Character demazure_step(const RootSystem& rs, int i, const Character& chi) {
    rs.require_simple_index(i);
    Character out;
    for (const auto& [lambda, mult] : chi.terms()) {
        const int k = lambda.fw[i - 1];
        if (k >= 0) {
            for (int j = 0; j <= k; ++j) out.add(shift_by_alpha(rs, lambda, i, j), mult);
        } else if (k <= -2) {
            for (int j = 1; j <= -k - 1; ++j) out.add(shift_by_alpha(rs, lambda, i, -j), -mult);
        }
        // k == -1 contributes nothing
    }
    return out;
}

Character demazure_apply(const RootSystem& rs, const Word& word, const Character& chi) {
    const WeylElement w = from_word(rs, word);
    if (length(rs, w) != static_cast<int>(word.size()))
        throw std::invalid_argument("demazure_apply requires a reduced word (got " +
                                    std::to_string(word.size()) + " letters for an element of "
                                    "length " + std::to_string(length(rs, w)) + ")");
    Character out = chi;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_step(rs, *it, out);
    return out;
}

Weight dot_action(const RootSystem& rs, int i, const Weight& lambda) {
    return rs.reflect(i, lambda + rs.rho()) - rs.rho();
}

Character module_character(const RootSystem& rs, const Parabolic& J) {
    Character out;
    for (const Root& beta : rs.positives())
        if (!rs.in_subsystem(beta, J)) out.add(rs.to_weight(beta), 1);
    return out;
}

Character h0_module_character(const RootSystem& rs, const WeylElement& w, const Parabolic& J,
                              bool strict) {
    if (strict && !in_min_coset_reps(rs, w, J))
        throw std::invalid_argument("h0_module_character: element is not in W^J");
    const Word word = reduced_word(rs, w);
    Character out;
    for (const Root& beta : rs.positives()) {
        if (rs.in_subsystem(beta, J)) continue;
        out = out + demazure_apply(rs, word, Character::monomial(rs.to_weight(beta)));
    }
    if (strict)
        for (const auto& [lambda, mult] : out.terms())
            if (mult < 0)
                throw std::logic_error("h0_module_character produced a negative multiplicity; "
                                       "positive-root filtrations must yield genuine modules");
    return out;
}

Character adjoint_character(const RootSystem& rs) {
    Character out;
    for (const Root& beta : rs.all_roots()) out.add(rs.to_weight(beta), 1);
    out.add(Weight(std::vector<int>(rs.rank(), 0)), rs.rank());
    return out;
}

}  // namespace schubaut
