// schubert.cpp

#include "schubaut/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubaut/classify.hpp"

namespace schubaut {

namespace {

bool vec_positive(const std::vector<int>& v) {
    for (int x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

// Stabilizer criterion evaluated from the columns of w^{-1}: simple i joins
// when w^{-1}(alpha_i) is negative or lies in the Levi subsystem R_J^+.
std::vector<int> stabilizer_from_inverse(const RootSystem& rs, const IntMatrix& inv,
                                         const Parabolic& J) {
    std::vector<int> stab;
    for (int i = 1; i <= rs.rank(); ++i) {
        const std::vector<int> gamma = inv.column(i - 1);
        if (!vec_positive(gamma)) {
            stab.push_back(i);
            continue;
        }
        bool in_levi = true;
        for (int j = 0; j < rs.rank(); ++j)
            if (gamma[j] != 0 && !J.contains(j + 1)) {
                in_levi = false;
                break;
            }
        if (in_levi) stab.push_back(i);
    }
    return stab;
}

bool faithful_from_inverse(const RootSystem& rs, const IntMatrix& inv) {
    return !vec_positive(inv.apply(rs.highest().coords));
}

// All subsets of {1..rank} in (cardinality, lexicographic) order.
std::vector<Parabolic> subsets_by_size(int rank, bool include_empty) {
    if (rank > 24)
        throw std::invalid_argument("scanning all 2^" + std::to_string(rank) +
                                    " ambient subsets is not feasible; rank is capped at 24");
    std::vector<std::vector<int>> raw;
    for (unsigned mask = include_empty ? 0 : 1; mask < (1u << rank); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        raw.push_back(std::move(s));
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Parabolic> out;
    out.reserve(raw.size());
    for (auto& s : raw) out.push_back(Parabolic(std::move(s)));
    return out;
}

}  // namespace

std::vector<int> stabilizer_simples(const RootSystem& rs, const WeylElement& w,
                                    const Parabolic& J) {
    for (int j : J.simples())
        if (!vec_positive(w.matrix().column(j - 1)))
            throw std::invalid_argument("element is not a minimal coset representative: w(alpha_" +
                                        std::to_string(j) + ") < 0");
    return stabilizer_from_inverse(rs, inverse(rs, w).matrix(), J);
}

bool is_faithful(const RootSystem& rs, const WeylElement& w) {
    return faithful_from_inverse(rs, inverse(rs, w).matrix());
}

WitnessReport verify_witness(const RootSystem& rs, int target, const Parabolic& J,
                             const WeylElement& w) {
    rs.require_simple_index(target);
    WitnessReport rep;
    rep.ambient = J;
    rep.element = w;
    rep.in_min_reps = in_min_coset_reps(rs, w, J);

    const IntMatrix inv = inverse(rs, w).matrix();
    rep.stabilizer = stabilizer_from_inverse(rs, inv, J);
    rep.faithful = faithful_from_inverse(rs, inv);

    if (!rep.in_min_reps) rep.failed.push_back("element not in W^J");
    if (rep.stabilizer != std::vector<int>{target})
        rep.failed.push_back("stabilizer is not exactly {" + std::to_string(target) + "}");
    if (!rep.faithful) rep.failed.push_back("w^{-1}(alpha_0) is not negative");
    rep.verdict = rep.failed.empty();
    return rep;
}

std::vector<std::pair<Parabolic, WeylElement>> search_witnesses(const RootSystem& rs, int target,
                                                                std::size_t cap) {
    rs.require_simple_index(target);
    const std::vector<int> want{target};
    std::vector<std::pair<Parabolic, WeylElement>> found;
    for (const Parabolic& J : subsets_by_size(rs.rank(), /*include_empty=*/false)) {
        MinRepStream stream(rs, J, cap);
        while (const auto* node = stream.next()) {
            if (!faithful_from_inverse(rs, node->inv)) continue;
            if (stabilizer_from_inverse(rs, node->inv, J) != want) continue;
            found.emplace_back(J, WeylElement(node->mat, node->word));
        }
    }
    return found;
}

std::vector<std::vector<std::pair<Parabolic, WeylElement>>> search_witnesses_all_targets(
    const RootSystem& rs, std::size_t cap) {
    std::vector<std::vector<std::pair<Parabolic, WeylElement>>> buckets(rs.rank());
    for (const Parabolic& J : subsets_by_size(rs.rank(), /*include_empty=*/false)) {
        MinRepStream stream(rs, J, cap);
        while (const auto* node = stream.next()) {
            if (!faithful_from_inverse(rs, node->inv)) continue;
            const std::vector<int> stab = stabilizer_from_inverse(rs, node->inv, J);
            if (stab.size() != 1) continue;
            buckets[stab.front() - 1].emplace_back(J, WeylElement(node->mat, node->word));
        }
    }
    return buckets;
}

bool minuscule_obstruction(const RootSystem& rs, int r) {
    // The candidate reduction below (the unique faithful minimal
    // representative) holds for simply-laced systems only; B2 genuinely
    // breaks it, witnessed by s_2 s_1 in the {2}-ambient flag variety.
    if (!rs.type().simply_laced())
        throw std::invalid_argument("minuscule_obstruction applies to simply-laced types only; " +
                                    rs.type().name() + " admits minuscule witnesses");
    if (!is_minuscule(rs, r))
        throw std::invalid_argument("omega_" + std::to_string(r) + " of " + rs.type().name() +
                                    " is not minuscule");
    const std::vector<int> sigma = diagram_automorphism(rs);
    const Parabolic J0 = Parabolic::all_but(rs.rank(), {sigma[r - 1]});
    const WeylElement w0 = longest_element(rs, Parabolic::full(rs.rank()));
    const WeylElement candidate = coset_decompose(rs, w0, J0).first;
    const IntMatrix inv = inverse(rs, candidate).matrix();

    const std::vector<int> want{r};
    for (const Parabolic& J : subsets_by_size(rs.rank(), /*include_empty=*/false)) {
        if (!in_min_coset_reps(rs, candidate, J)) continue;
        if (stabilizer_from_inverse(rs, inv, J) == want) return false;
    }
    return true;
}

}  // namespace schubaut
