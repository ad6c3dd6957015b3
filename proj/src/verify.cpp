// verify.cpp -- verification batteries.

#include "schubaut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "schubaut/classify.hpp"
#include "schubaut/constructions.hpp"
#include "schubaut/demazure.hpp"
#include "schubaut/extremal.hpp"
#include "schubaut/schubert.hpp"

namespace schubaut {

namespace {

using Clock = std::chrono::steady_clock;

class Battery {
public:
    explicit Battery(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

    void require(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 5) first_failures_ += (first_failures_.empty() ? "" : "; ") + what;
        }
    }

    CheckResult finish(const std::string& extra = "") {
        CheckResult r;
        r.name = name_;
        r.pass = failures_ == 0;
        r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        r.detail = std::to_string(total_ - failures_) + "/" + std::to_string(total_) + " checks";
        if (!extra.empty()) r.detail += ", " + extra;
        if (failures_ > 0) r.detail += "; first failures: " + first_failures_;
        return r;
    }

private:
    std::string name_;
    Clock::time_point start_;
    int total_ = 0;
    int failures_ = 0;
    std::string first_failures_;
};

std::vector<CartanType> classification_types() {
    std::vector<CartanType> types;
    for (int n = 1; n <= 8; ++n) types.push_back({'A', n});
    for (int n = 4; n <= 8; ++n) types.push_back({'D', n});
    types.push_back({'E', 6});
    types.push_back({'E', 7});
    types.push_back({'E', 8});
    return types;
}

std::vector<int> expected_minuscule(const CartanType& t) {
    switch (t.family) {
        case 'A': {
            std::vector<int> all(t.rank);
            for (int i = 0; i < t.rank; ++i) all[i] = i + 1;
            return all;
        }
        case 'D': return {1, t.rank - 1, t.rank};
        case 'E':
            if (t.rank == 6) return {1, 6};
            if (t.rank == 7) return {7};
            return {};
        case 'B': return {2};
    }
    return {};
}

std::string tname(const CartanType& t) { return t.name(); }

}  // namespace

CheckResult check_classification() {
    Battery b("table-1 classification");
    auto types = classification_types();
    types.push_back({'B', 2});
    for (const CartanType& t : types) {
        const RootSystem rs = RootSystem::build(t);
        std::vector<int> minuscule;
        for (const MinusculeReport& rep : classify_all(rs)) {
            if (rep.minuscule) minuscule.push_back(rep.index);
            if (t.simply_laced()) {
                b.require(rep.minuscule == rep.cominuscule,
                          tname(t) + " node " + std::to_string(rep.index) +
                              " minuscule/cominuscule disagree");
                // the image criterion characterises minuscule nodes in the
                // simply-laced case only
                b.require((rep.w0J_image == rs.highest()) == rep.minuscule,
                          tname(t) + " node " + std::to_string(rep.index) +
                              " parabolic image criterion");
            }
        }
        b.require(minuscule == expected_minuscule(t), tname(t) + " minuscule set");
    }
    return b.finish();
}

CheckResult check_highest_roots() {
    Battery b("highest-root golden values");
    for (int n = 4; n <= 10; ++n) {
        const RootSystem rs = RootSystem::build(CartanType{'D', n});
        std::vector<int> want(n, 2);
        want[0] = 1;
        want[n - 2] = 1;
        want[n - 1] = 1;
        b.require(rs.highest().coords == want, "D" + std::to_string(n) + " highest root");
    }
    b.require(RootSystem::build("E6").highest().coords == std::vector<int>({1, 2, 2, 3, 2, 1}),
              "E6 highest root");
    b.require(RootSystem::build("E7").highest().coords == std::vector<int>({2, 2, 3, 4, 3, 2, 1}),
              "E7 highest root");
    b.require(RootSystem::build("E8").highest().coords ==
                  std::vector<int>({2, 3, 4, 6, 5, 4, 3, 2}),
              "E8 highest root");
    for (int n = 1; n <= 8; ++n)
        b.require(RootSystem::build(CartanType{'A', n}).highest().coords ==
                      std::vector<int>(n, 1),
                  "A" + std::to_string(n) + " highest root");
    b.require(RootSystem::build("B2").highest().coords == std::vector<int>({1, 2}),
              "B2 highest root");
    return b.finish();
}

CheckResult check_extremal_lengths() {
    Battery b("transporter/negator lengths");
    std::vector<CartanType> types;
    for (int n = 1; n <= 6; ++n) types.push_back({'A', n});
    for (int n = 4; n <= 6; ++n) types.push_back({'D', n});
    types.push_back({'E', 6});
    types.push_back({'E', 7});
    types.push_back({'E', 8});
    for (const CartanType& t : types) {
        const RootSystem rs = RootSystem::build(t);
        const int g = dual_coxeter(rs);
        int ht0 = 0;
        for (int x : rs.highest().coords) ht0 += x;
        b.require(g == ht0 + 1, tname(t) + " dual Coxeter number vs height");
        for (int r = 1; r <= rs.rank(); ++r) {
            const TransporterResult u = minimal_transporter(rs, rs.simple_root(r));
            const TransporterResult v = minimal_negator(rs, r);
            const std::string at = tname(t) + " node " + std::to_string(r);
            b.require(u.length == g - 2 && u.unique, at + " transporter length/uniqueness");
            b.require(v.length == ht0 && v.unique, at + " negator length/uniqueness");
            b.require(v.element == product(u.element, simple_reflection(rs, r)),
                      at + " negator = transporter * s_r");
            b.require(length(rs, u.element) == u.length, at + " transporter word reduced");
        }
    }
    return b.finish();
}

CheckResult check_tabulated_words() {
    Battery b("tabulated negator words");
    const std::vector<std::pair<CartanType, std::pair<int, int>>> table = {
        {{'E', 6}, {2, 11}}, {{'E', 7}, {4, 17}}, {{'E', 8}, {6, 29}}};
    for (const auto& [t, target_len] : table) {
        const auto [target, len] = target_len;
        const RootSystem rs = RootSystem::build(t);
        const Word word = tabulated_negator_word(t);
        const WeylElement v = from_word(rs, word);
        b.require(static_cast<int>(word.size()) == len, tname(t) + " word letter count");
        b.require(length(rs, v) == len, tname(t) + " word reduced");
        b.require(apply(rs, inverse(rs, v), rs.highest()) == -rs.simple_root(target),
                  tname(t) + " word negates alpha_" + std::to_string(target));
        b.require(minimal_negator(rs, target).element == v,
                  tname(t) + " word equals BFS negator");
    }
    return b.finish();
}

CheckResult check_lemma_suites(int dn_max) {
    Battery b("lemma suites");
    int suites = 0;
    for (const LemmaSuiteResult& suite : run_all_lemma_suites(dn_max)) {
        ++suites;
        b.require(suite.all_pass, suite.suite_id);
    }
    return b.finish(std::to_string(suites) + " suites");
}

CheckResult check_witness_verdicts(int dn_max) {
    Battery b("witness verdicts");
    for (int n = 4; n <= dn_max; ++n) {
        const RootSystem rs = RootSystem::build(CartanType{'D', n});
        for (int i = 2; i <= n - 2; ++i) {
            const Construction c = build_dn(rs, i);
            b.require(verify_witness(rs, i, c.ambient, c.element).verdict,
                      "D" + std::to_string(n) + " w_" + std::to_string(i));
        }
    }
    const std::vector<std::pair<CartanType, std::vector<int>>> etable = {
        {{'E', 6}, {2, 3, 4, 5}},
        {{'E', 7}, {1, 2, 3, 4, 5, 6}},
        {{'E', 8}, {1, 2, 3, 4, 5, 6, 7, 8}}};
    for (const auto& [t, targets] : etable) {
        const RootSystem rs = RootSystem::build(t);
        for (int i : targets) {
            const Construction c = build_e(rs, i);
            b.require(verify_witness(rs, i, c.ambient, c.element).verdict,
                      tname(t) + " w_" + std::to_string(i));
        }
    }
    return b.finish();
}

namespace {

CheckResult run_search_oracle(const std::string& name, const std::vector<CartanType>& types,
                              std::size_t cap) {
    Battery b(name);
    long long pairs_scanned = 0;
    for (const CartanType& t : types) {
        const RootSystem rs = RootSystem::build(t);
        const auto buckets = search_witnesses_all_targets(rs, cap);
        for (int r = 1; r <= rs.rank(); ++r) {
            const auto& found = buckets[r - 1];
            pairs_scanned += static_cast<long long>(found.size());
            const std::string at = tname(t) + " target " + std::to_string(r);
            if (is_minuscule(rs, r)) {
                b.require(found.empty(), at + " minuscule but witnesses found");
            } else {
                b.require(!found.empty(), at + " non-minuscule but no witness");
                Construction c = t.family == 'D' ? build_dn(rs, r) : build_e(rs, r);
                const bool has_construction =
                    std::any_of(found.begin(), found.end(), [&](const auto& jw) {
                        return jw.first == c.ambient && jw.second == c.element;
                    });
                b.require(has_construction, at + " search missed the explicit construction");
            }
        }
        // cross-check the per-target operation against the bucketed scan on
        // the first target
        b.require(search_witnesses(rs, 1, cap) == buckets[0],
                  tname(t) + " per-target search agrees with the bucketed scan");
    }
    return b.finish(std::to_string(pairs_scanned) + " witnesses found");
}

}  // namespace

CheckResult check_search_oracle_default(std::size_t cap) {
    return run_search_oracle("exhaustive witness oracle (A2, A3, D4)",
                             {{'A', 2}, {'A', 3}, {'D', 4}}, cap);
}

CheckResult check_search_oracle_deep(std::size_t cap) {
    return run_search_oracle("exhaustive witness oracle, deep (D5, E6)", {{'D', 5}, {'E', 6}},
                             cap);
}

CheckResult check_minuscule_obstructions() {
    Battery b("minimal-parabolic obstruction for minuscule weights");
    for (const CartanType& t : classification_types()) {
        const RootSystem rs = RootSystem::build(t);
        for (int r : expected_minuscule(t))
            b.require(minuscule_obstruction(rs, r),
                      tname(t) + " omega_" + std::to_string(r) + " obstruction");
    }
    return b.finish();
}

CheckResult check_b2_remark() {
    Battery b("B2 Demazure remark");
    const RootSystem rs = RootSystem::build("B2");
    const WeylElement w = from_word(rs, {2, 1});
    const Parabolic J({2});
    b.require(in_min_coset_reps(rs, w, J), "s_2 s_1 in W^{2}");
    const Character h0 = h0_module_character(rs, w, J);
    b.require(h0.dimension() == 10, "dimension 10");
    b.require(h0 == adjoint_character(rs), "equals the adjoint character");

    Character expected;
    const Root a1 = rs.simple_root(1), a2 = rs.simple_root(2);
    for (const Root& beta : {a1, a1 + a2, a1 + a2 + a2, a2}) {
        expected.add(rs.to_weight(beta), 1);
        expected.add(rs.to_weight(-beta), 1);
    }
    expected.add(Weight({0, 0}), 2);
    b.require(h0 == expected, "weight multiset {+-a1, +-(a1+a2), +-(a1+2a2), +-a2, 0 x2}");

    const Character gp2 = module_character(rs, J);
    b.require(gp2.dimension() == 3, "g/p_2 has 3 filtration weights");
    b.require(demazure_apply(rs, {2, 1}, gp2) == h0, "operator composition route agrees");
    return b.finish();
}

CheckResult check_property_suites() {
    Battery b("structural property suites");
    std::vector<CartanType> types = classification_types();
    types.push_back({'B', 2});

    for (const CartanType& t : types) {
        const RootSystem rs = RootSystem::build(t);
        const int n = rs.rank();

        // braid relations for every generator pair
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int prod = rs.cartan(i, j) * rs.cartan(j, i);
                const int m = prod == 0 ? 2 : (prod == 1 ? 3 : 4);
                Word lhs, rhs;
                for (int k = 0; k < m; ++k) {
                    lhs.push_back(k % 2 == 0 ? i : j);
                    rhs.push_back(k % 2 == 0 ? j : i);
                }
                b.require(from_word(rs, lhs) == from_word(rs, rhs),
                          tname(t) + " braid relation (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
            }

        // seeded random elements: length = |inversions| = |reduced word|,
        // reduced word recomposes, left multiplication steps by one
        std::mt19937 rng(20240u + static_cast<unsigned>(t.family) * 100u +
                         static_cast<unsigned>(t.rank));
        std::uniform_int_distribution<int> letter(1, n);
        std::uniform_int_distribution<int> wordlen(0, 2 * static_cast<int>(rs.positives().size()));
        int bad = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            Word word(wordlen(rng));
            for (int& x : word) x = letter(rng);
            const WeylElement w = from_word(rs, word);
            const int len = length(rs, w);
            const Word rw = reduced_word(rs, w);
            if (static_cast<int>(rw.size()) != len) ++bad;
            if (static_cast<int>(inversions(rs, w).size()) != len) ++bad;
            if (!(from_word(rs, rw) == w)) ++bad;
            const int i = letter(rng);
            const int step = length(rs, product(simple_reflection(rs, i), w)) - len;
            if (step != 1 && step != -1) ++bad;
        }
        b.require(bad == 0, tname(t) + " random-element length identities");

        // the longest element negates every positive root
        const WeylElement w0 = longest_element(rs, Parabolic::full(n));
        bool all_negative = true;
        for (const Root& beta : rs.positives())
            if (rs.is_positive(Root(w0.matrix().apply(beta.coords)))) all_negative = false;
        b.require(all_negative, tname(t) + " longest element negates R^+");
        b.require(length(rs, w0) == static_cast<int>(rs.positives().size()),
                  tname(t) + " longest element length");
    }

    // |W| = |W^J| * |W_J| over every subset of A3 and D4, plus coset
    // decomposition idempotence
    for (const CartanType& t : {CartanType{'A', 3}, CartanType{'D', 4}}) {
        const RootSystem rs = RootSystem::build(t);
        const std::size_t order = min_reps(rs, Parabolic(std::vector<int>{})).size();
        for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
            std::vector<int> simples;
            for (int i = 0; i < rs.rank(); ++i)
                if (mask & (1u << i)) simples.push_back(i + 1);
            const Parabolic J(simples);
            const auto reps = min_reps(rs, J);
            const auto sub = parabolic_elements(rs, J);
            b.require(reps.size() * sub.size() == order,
                      tname(t) + " order factorisation at J=" + J.to_string());
            for (std::size_t k = 0; k < reps.size(); k += std::max<std::size_t>(1, reps.size() / 7)) {
                const auto [wJup, wJdown] = coset_decompose(rs, reps[k], J);
                b.require(wJup == reps[k] && wJdown.is_identity(),
                          tname(t) + " coset decomposition idempotent on W^J");
            }
        }
    }

    // Demazure operator laws on a fixed probe grid over A2 and B2
    for (const CartanType& t : {CartanType{'A', 2}, CartanType{'B', 2}}) {
        const RootSystem rs = RootSystem::build(t);
        int probes = 0, bad = 0;
        for (int a = -7; a <= 7 && probes < 200; ++a)
            for (int bq = -7; bq <= 7 && probes < 200; ++bq) {
                ++probes;
                const Weight lambda({a, bq});
                for (int i = 1; i <= 2; ++i) {
                    const Character image = demazure_step(rs, i, Character::monomial(lambda));
                    if (!(demazure_step(rs, i, image) == image)) ++bad;
                    if (rs.pair(lambda, i) != -1) {
                        const Character mirrored =
                            demazure_step(rs, i, Character::monomial(dot_action(rs, i, lambda)));
                        if (!(image + mirrored).empty()) ++bad;
                    }
                }
            }
        b.require(bad == 0, tname(t) + " Demazure idempotence/antisymmetry");
    }

    // word independence of the operator on every element of length <= 4
    for (const CartanType& t : {CartanType{'A', 2}, CartanType{'B', 2}}) {
        const RootSystem rs = RootSystem::build(t);
        const Character probe = module_character(rs, Parabolic(std::vector<int>{})) +
                                Character::monomial(rs.rho()) + adjoint_character(rs);
        int bad = 0;
        for (const WeylElement& w : min_reps(rs, Parabolic(std::vector<int>{}))) {
            if (length(rs, w) > 4) continue;
            // enumerate all reduced words by peeling right descents
            std::vector<Word> words;
            std::vector<std::pair<WeylElement, Word>> stack{{w, {}}};
            while (!stack.empty()) {
                auto [cur, suffix] = stack.back();
                stack.pop_back();
                if (cur.is_identity()) {
                    words.push_back(suffix);
                    continue;
                }
                for (int i = 1; i <= rs.rank(); ++i) {
                    const WeylElement next = product(cur, simple_reflection(rs, i));
                    if (length(rs, next) != length(rs, cur) - 1) continue;
                    Word s;
                    s.push_back(i);
                    s.insert(s.end(), suffix.begin(), suffix.end());
                    stack.emplace_back(next, std::move(s));
                }
            }
            const Character reference = demazure_apply(rs, words.front(), probe);
            for (const Word& word : words)
                if (!(demazure_apply(rs, word, probe) == reference)) ++bad;
        }
        b.require(bad == 0, tname(t) + " reduced-word independence of the operator");
    }

    return b.finish();
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    out.push_back(check_classification());
    out.push_back(check_highest_roots());
    out.push_back(check_extremal_lengths());
    out.push_back(check_tabulated_words());
    out.push_back(check_lemma_suites(options.dn_max));
    out.push_back(check_witness_verdicts(options.dn_max));
    out.push_back(check_search_oracle_default(options.cap));
    if (options.deep) out.push_back(check_search_oracle_deep(options.cap));
    out.push_back(check_minuscule_obstructions());
    out.push_back(check_b2_remark());
    out.push_back(check_property_suites());
    return out;
}

}  // namespace schubaut
