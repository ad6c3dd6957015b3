// classify.cpp

#include "schubaut/classify.hpp"

#include <stdexcept>

namespace schubaut {

bool is_minuscule(const RootSystem& rs, int r) {
    rs.require_simple_index(r);
    for (const Root& beta : rs.positives())
        if (rs.coroot_coords(beta)[r - 1] > 1) return false;
    return true;
}

bool is_cominuscule(const RootSystem& rs, int r) {
    rs.require_simple_index(r);
    return rs.highest().coords[r - 1] == 1;
}

Root parabolic_longest_image(const RootSystem& rs, int r) {
    rs.require_simple_index(r);
    const WeylElement w0J = longest_element(rs, Parabolic::all_but(rs.rank(), {r}));
    return apply(rs, w0J, rs.simple_root(r));
}

bool check_minimal_negative_rep(const RootSystem& rs, int r, std::size_t cap) {
    if (!is_minuscule(rs, r))
        throw std::invalid_argument("omega_" + std::to_string(r) + " of " + rs.type().name() +
                                    " is not minuscule");
    const Parabolic J = Parabolic::all_but(rs.rank(), {r});
    const WeylElement expected = coset_decompose(rs, longest_element(rs, Parabolic::full(rs.rank())), J).first;

    MinRepStream stream(rs, J, cap);
    int negators = 0;
    bool matches = false;
    while (const auto* node = stream.next()) {
        if (rs.is_positive(Root(node->mat.apply(rs.highest().coords)))) continue;
        ++negators;
        if (node->mat == expected.matrix()) matches = true;
    }
    return negators == 1 && matches;
}

std::vector<MinusculeReport> classify_all(const RootSystem& rs) {
    std::vector<MinusculeReport> out;
    for (int r = 1; r <= rs.rank(); ++r) {
        MinusculeReport rep;
        rep.index = r;
        rep.minuscule = is_minuscule(rs, r);
        rep.cominuscule = is_cominuscule(rs, r);
        rep.w0J_image = parabolic_longest_image(rs, r);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace schubaut
