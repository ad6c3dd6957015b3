// constructions.cpp -- witness elements and the root-image identity suites.

#include "schubaut/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubaut/classify.hpp"

namespace schubaut {

namespace {

std::string coords_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string root_str(const Root& r) { return coords_str(r.coords); }

Root make_root(int n, std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> c(n, 0);
    for (auto [idx, coeff] : entries) c[idx - 1] = coeff;
    return Root(std::move(c));
}

// 1's on [lo1, hi1], 2's on [lo2, hi2], plus alpha_{n-1} + alpha_n when tail.
Root dn_band(int n, int lo1, int hi1, int lo2, int hi2, bool tail) {
    std::vector<int> c(n, 0);
    for (int j = lo1; j <= hi1; ++j) c[j - 1] += 1;
    for (int j = lo2; j <= hi2; ++j) c[j - 1] += 2;
    if (tail) {
        c[n - 2] += 1;
        c[n - 1] += 1;
    }
    return Root(std::move(c));
}

struct SuiteBuilder {
    LemmaSuiteResult result;

    explicit SuiteBuilder(std::string id) { result.suite_id = std::move(id); }

    void expect_root(const std::string& desc, const Root& expected, const Root& computed) {
        result.checks.push_back(
            LemmaCheck{desc, root_str(expected), root_str(computed), expected == computed});
    }

    void expect_sign(const RootSystem& rs, const std::string& desc, bool want_positive,
                     const Root& computed) {
        const bool pos = rs.is_positive(computed);
        result.checks.push_back(LemmaCheck{desc, want_positive ? "positive root" : "negative root",
                                           root_str(computed), pos == want_positive});
    }

    void expect_nonsimple_positive(const RootSystem& rs, const std::string& desc,
                                   const Root& computed) {
        int height = 0;
        for (int x : computed.coords) height += x;
        const bool ok = rs.is_positive(computed) && height >= 2;
        result.checks.push_back(
            LemmaCheck{desc, "non-simple positive root", root_str(computed), ok});
    }

    void expect_true(const std::string& desc, bool ok, const std::string& expected,
                     const std::string& computed) {
        result.checks.push_back(LemmaCheck{desc, expected, computed, ok});
    }

    void note(std::string text) { result.notes.push_back(std::move(text)); }

    LemmaSuiteResult finish() {
        result.all_pass = std::all_of(result.checks.begin(), result.checks.end(),
                                      [](const LemmaCheck& c) { return c.pass; });
        return std::move(result);
    }
};

Root apply_inv(const RootSystem& rs, const WeylElement& w, const Root& beta) {
    return apply(rs, inverse(rs, w), beta);
}

void require_family(const RootSystem& rs, char family, const char* what) {
    if (rs.type().family != family)
        throw std::invalid_argument(std::string(what) + " requires a root system of family " +
                                    std::string(1, family) + ", got " + rs.type().name());
}

// E-type construction constants: the node carrying the highest root as a
// fundamental weight, and the ambient minimal parabolic of the flag variety
// the witnesses live in.
struct ETypeData {
    int adjoint_node;
    int ambient;
    std::vector<int> admissible;
};

ETypeData e_data(const CartanType& t) {
    switch (t.rank) {
        case 6: return {2, 4, {2, 3, 4, 5}};
        case 7: return {1, 3, {1, 2, 3, 4, 5, 6}};
        case 8: return {8, 7, {1, 2, 3, 4, 5, 6, 7, 8}};
        default: throw std::invalid_argument("not an E type: " + t.name());
    }
}

}  // namespace

Word dn_u_word(int n, int i) {
    if (n < 4 || i < 1 || i > n - 2)
        throw std::invalid_argument("u_i needs 1 <= i <= n-2 in D_n");
    Word w;
    for (int t = i; t <= n - 2; ++t) w.push_back(t);
    w.push_back(n - 1);
    w.push_back(n);
    for (int t = n - 2; t >= i; --t) w.push_back(t);
    return w;
}

Word dn_v_word(int n, int i) {
    if (n < 4 || i < 1 || i > n - 3)
        throw std::invalid_argument("v_i needs 1 <= i <= n-3 in D_n");
    Word w;
    for (int t = 2; t <= n - 2; ++t) w.push_back(t);
    w.push_back(n - 1);
    w.push_back(n);
    for (int t = n - 2; t >= i + 1; --t) w.push_back(t);
    for (int t = 1; t <= i; ++t) w.push_back(t);
    return w;
}

Word tabulated_negator_word(const CartanType& type) {
    if (type.family == 'E') {
        switch (type.rank) {
            case 6: return {2, 4, 5, 3, 6, 4, 1, 3, 5, 4, 2};
            case 7: return {1, 3, 4, 5, 2, 4, 3, 6, 5, 4, 1, 2, 3, 7, 6, 5, 4};
            case 8:
                return {8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6, 4, 2, 5,
                        7, 4, 6, 5, 3, 4, 2, 8, 7, 1, 3, 4, 5, 6};
        }
    }
    throw std::invalid_argument("no tabulated negator word for " + type.name());
}

Construction build_dn(const RootSystem& rs, int i) {
    require_family(rs, 'D', "build_dn");
    const int n = rs.rank();
    if (i < 2 || i > n - 2)
        throw std::invalid_argument("admissible D_" + std::to_string(n) +
                                    " targets are 2..n-2 (the non-minuscule nodes)");
    const WeylElement u = from_word(rs, dn_u_word(n, i));
    WeylElement w;
    if (i == 2) {
        w = product(u, simple_reflection(rs, 1));
    } else {
        WeylElement acc = u;
        for (int k = i - 1; k >= 3; --k) {
            Word prefix;
            for (int t = k; t <= i - 1; ++t) prefix.push_back(t);
            acc = product(acc, product(from_word(rs, prefix), u));
        }
        w = product(acc, minimal_negator(rs, i - 1).element);
    }
    return Construction{i, Parabolic({i}), std::move(w)};
}

Construction build_e(const RootSystem& rs, int i) {
    require_family(rs, 'E', "build_e");
    const ETypeData data = e_data(rs.type());
    if (std::find(data.admissible.begin(), data.admissible.end(), i) == data.admissible.end()) {
        rs.require_simple_index(i);
        throw std::invalid_argument("omega_" + std::to_string(i) + " of " + rs.type().name() +
                                    " is minuscule; only non-minuscule targets admit a witness "
                                    "construction");
    }
    const WeylElement v = from_word(rs, tabulated_negator_word(rs.type()));
    const WeylElement inner = longest_element(rs, Parabolic::all_but(rs.rank(), {data.adjoint_node}));
    const WeylElement outer =
        longest_element(rs, Parabolic::all_but(rs.rank(), {data.adjoint_node, i}));
    return Construction{i, Parabolic({data.ambient}), product(product(outer, inner), v)};
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

namespace {

LemmaSuiteResult suite_d_u_images(int n) {
    SuiteBuilder sb("D.u.images");
    const RootSystem rs = RootSystem::build(CartanType{'D', n});
    for (int i = 1; i <= n - 2; ++i) {
        const WeylElement u = from_word(rs, dn_u_word(n, i));
        const std::string ui = "u_" + std::to_string(i);
        sb.expect_true(ui + " is an involution", product(u, u).is_identity(), "identity",
                       product(u, u).is_identity() ? "identity" : "not identity");
        for (int j = 1; j <= i - 2; ++j)
            sb.expect_root(ui + "(a" + std::to_string(j) + ") fixed", rs.simple_root(j),
                           apply(rs, u, rs.simple_root(j)));
        if (i >= 2)
            sb.expect_root(ui + "(a" + std::to_string(i - 1) + ")",
                           dn_band(n, i - 1, i - 1, i, n - 2, true),
                           apply(rs, u, rs.simple_root(i - 1)));
        sb.expect_root(ui + "(a" + std::to_string(i) + ")",
                       -dn_band(n, i, i, i + 1, n - 2, true), apply(rs, u, rs.simple_root(i)));
        if (i >= 2)
            sb.expect_root(ui + "(a" + std::to_string(i - 1) + "+a" + std::to_string(i) + ") fixed",
                           rs.simple_root(i - 1) + rs.simple_root(i),
                           apply(rs, u, rs.simple_root(i - 1) + rs.simple_root(i)));
        for (int j = i + 1; j <= n - 2; ++j)
            sb.expect_root(ui + "(a" + std::to_string(j) + ") fixed", rs.simple_root(j),
                           apply(rs, u, rs.simple_root(j)));
        sb.expect_root(ui + "(a" + std::to_string(n - 1) + ") = a" + std::to_string(n),
                       rs.simple_root(n), apply(rs, u, rs.simple_root(n - 1)));
        sb.expect_root(ui + "(a" + std::to_string(n) + ") = a" + std::to_string(n - 1),
                       rs.simple_root(n - 1), apply(rs, u, rs.simple_root(n)));
    }
    return sb.finish();
}

LemmaSuiteResult suite_d_v_words(int n) {
    SuiteBuilder sb("D.v.words");
    const RootSystem rs = RootSystem::build(CartanType{'D', n});
    for (int i = 1; i <= n - 3; ++i) {
        const Word word = dn_v_word(n, i);
        const WeylElement v = from_word(rs, word);
        const std::string vi = "v_" + std::to_string(i);
        const int len = length(rs, v);
        sb.expect_true(vi + " word of " + std::to_string(word.size()) + " letters is reduced",
                       len == static_cast<int>(word.size()), std::to_string(word.size()),
                       std::to_string(len));
        sb.expect_root(vi + "^-1(highest) = -a" + std::to_string(i), -rs.simple_root(i),
                       apply_inv(rs, v, rs.highest()));
        const TransporterResult bfs = minimal_negator(rs, i);
        sb.expect_true(vi + " equals the minimal negator of a" + std::to_string(i),
                       bfs.element == v, "matrix equality",
                       bfs.element == v ? "equal" : "different");
    }
    return sb.finish();
}

LemmaSuiteResult suite_d_v_images(int n) {
    SuiteBuilder sb("D.v.images");
    const RootSystem rs = RootSystem::build(CartanType{'D', n});
    for (int i = 1; i <= n - 3; ++i) {
        const WeylElement v = from_word(rs, dn_v_word(n, i));
        const WeylElement vinv = inverse(rs, v);
        const std::string vi = "v_" + std::to_string(i);
        sb.expect_root(vi + "(a" + std::to_string(i + 1) + ") = a1+...+a" + std::to_string(i + 1),
                       dn_band(n, 1, i + 1, 1, 0, false), apply(rs, v, rs.simple_root(i + 1)));
        sb.expect_root(vi + "^-1(a1)", dn_band(n, i, i, i + 1, n - 2, true),
                       apply(rs, vinv, rs.simple_root(1)));
        if (i == 1) {
            // The tabulated line for v_1^-1(a2) carries coefficient 2 at a2,
            // which no D_n root allows on a1-adjacent support of this shape;
            // the value below is forced by the v_1 word itself (coefficient 1
            // at a2, twos from a3 on) and is what the engine computes.
            const Root corrected = -dn_band(n, 1, 2, 3, n - 2, true);
            sb.expect_root(vi + "^-1(a2)", corrected, apply(rs, vinv, rs.simple_root(2)));
            sb.note("tabulated value for v_1^-1(a2) reads " +
                    root_str(-dn_band(n, 1, 1, 2, n - 2, true)) + "; the v_1 word forces " +
                    root_str(corrected) + "; no construction consumes v_1, so no verdict depends "
                    "on this line");
        } else {
            sb.expect_root(vi + "^-1(a2)", -dn_band(n, 1, i - 1, i, n - 2, true),
                           apply(rs, vinv, rs.simple_root(2)));
        }
        for (int j = 3; j <= i; ++j)
            sb.expect_root(vi + "^-1(a" + std::to_string(j) + ") = a" + std::to_string(j - 2),
                           rs.simple_root(j - 2), apply(rs, vinv, rs.simple_root(j)));
        if (i >= 2)
            sb.expect_root(vi + "^-1(a" + std::to_string(i + 1) + ")",
                           dn_band(n, i - 1, i + 1, 1, 0, false),
                           apply(rs, vinv, rs.simple_root(i + 1)));
        for (int j = i + 2; j <= n - 2; ++j)
            sb.expect_root(vi + "^-1(a" + std::to_string(j) + ") fixed", rs.simple_root(j),
                           apply(rs, vinv, rs.simple_root(j)));
        sb.expect_root(vi + "^-1(a" + std::to_string(n - 1) + ") = a" + std::to_string(n),
                       rs.simple_root(n), apply(rs, vinv, rs.simple_root(n - 1)));
        sb.expect_root(vi + "^-1(a" + std::to_string(n) + ") = a" + std::to_string(n - 1),
                       rs.simple_root(n - 1), apply(rs, vinv, rs.simple_root(n)));
    }
    if (n >= 6) {
        // The tabulated derivation of v_i^-1(a_{i+1}) abbreviates the final
        // step to a single simple root; the engine value below documents the
        // full chain s_i...s_1(a_i + a_{i+1}) actually used by the identity.
        const int i = 2;
        Word chain;
        for (int t = i; t >= 1; --t) chain.push_back(t);
        const Root value =
            apply(rs, from_word(rs, chain), rs.simple_root(i) + rs.simple_root(i + 1));
        sb.note("derivation step s_" + std::to_string(i) + "...s_1(a" + std::to_string(i) + "+a" +
                std::to_string(i + 1) + ") evaluates to " + root_str(value) +
                " (a single simple root appears in the tabulated derivation; the identity's "
                "stated value is unaffected and checked above)");
    }
    return sb.finish();
}

LemmaSuiteResult suite_d_w_images(int n) {
    SuiteBuilder sb("D.w.images");
    const RootSystem rs = RootSystem::build(CartanType{'D', n});
    for (int i = 2; i <= n - 2; ++i) {
        const Construction c = build_dn(rs, i);
        const WeylElement winv = inverse(rs, c.element);
        const std::string wi = "w_" + std::to_string(i);
        sb.expect_root(wi + "(a" + std::to_string(i) + ") = a1+...+a" + std::to_string(i),
                       dn_band(n, 1, i, 1, 0, false), apply(rs, c.element, rs.simple_root(i)));
        sb.expect_nonsimple_positive(rs, wi + "(a" + std::to_string(i) + ") non-simple positive",
                                     apply(rs, c.element, rs.simple_root(i)));
        if (i == 2)
            sb.expect_root("w_2^-1(a1)", dn_band(n, 1, 1, 2, n - 2, true),
                           apply(rs, winv, rs.simple_root(1)));
        if (i == 3)
            sb.expect_root("w_3^-1(a2) = a1", rs.simple_root(1),
                           apply(rs, winv, rs.simple_root(2)));
        if (i >= 4) {
            sb.expect_root(wi + "^-1(a1)", dn_band(n, i - 1, i - 1, i, n - 2, true),
                           apply(rs, winv, rs.simple_root(1)));
            sb.expect_root(wi + "^-1(a2) = a" + std::to_string(i - 2), rs.simple_root(i - 2),
                           apply(rs, winv, rs.simple_root(2)));
            for (int j = 3; j <= i - 2; ++j)
                sb.expect_root(wi + "^-1(a" + std::to_string(j) + ") = a" + std::to_string(i - j),
                               rs.simple_root(i - j), apply(rs, winv, rs.simple_root(j)));
            sb.expect_root(wi + "^-1(a" + std::to_string(i - 1) + ") = a1", rs.simple_root(1),
                           apply(rs, winv, rs.simple_root(i - 1)));
        }
    }
    return sb.finish();
}

LemmaSuiteResult suite_d_w_signs(int n) {
    SuiteBuilder sb("D.w.signs");
    const RootSystem rs = RootSystem::build(CartanType{'D', n});
    for (int i = 2; i <= n - 2; ++i) {
        const Construction c = build_dn(rs, i);
        const WeylElement winv = inverse(rs, c.element);
        const std::string wi = "w_" + std::to_string(i);
        for (int j = 1; j <= n; ++j)
            sb.expect_sign(rs, wi + "^-1(a" + std::to_string(j) + ")", j != i,
                           apply(rs, winv, rs.simple_root(j)));
        sb.expect_sign(rs, wi + "^-1(highest)", false, apply(rs, winv, rs.highest()));
        if (i >= 3)
            sb.expect_root(wi + "^-1(highest) = -a" + std::to_string(i - 1),
                           -rs.simple_root(i - 1), apply(rs, winv, rs.highest()));
        else
            sb.expect_root("w_2^-1(highest) = -a1", -rs.simple_root(1),
                           apply(rs, winv, rs.highest()));
    }
    return sb.finish();
}

// --- E-type fixed tables ---------------------------------------------------

struct TripleImage {
    int i;
    std::vector<int> first;   // w_{0, S\{r0, i}}(alpha_target)
    std::vector<int> second;  // w_{0, S\{r0}} applied on top
    std::vector<int> third;   // v^{-1} (or v, where self-inverse) applied on top
};

LemmaSuiteResult suite_e6_v2_word() {
    SuiteBuilder sb("E6.v2.word");
    const RootSystem rs = RootSystem::build("E6");
    const Word word = tabulated_negator_word(rs.type());
    const WeylElement v2 = from_word(rs, word);
    sb.expect_true("v_2 word of 11 letters is reduced", length(rs, v2) == 11, "11",
                   std::to_string(length(rs, v2)));
    sb.expect_root("v_2^-1(highest) = -a2", -rs.simple_root(2), apply_inv(rs, v2, rs.highest()));
    sb.expect_true("v_2 is an involution", product(v2, v2).is_identity(), "identity",
                   product(v2, v2).is_identity() ? "identity" : "not identity");
    const TransporterResult bfs = minimal_negator(rs, 2);
    sb.expect_true("v_2 equals the minimal negator of a2", bfs.element == v2, "matrix equality",
                   bfs.element == v2 ? "equal" : "different");
    return sb.finish();
}

LemmaSuiteResult suite_e6_v2_images() {
    SuiteBuilder sb("E6.v2.images");
    const RootSystem rs = RootSystem::build("E6");
    const WeylElement v2 = from_word(rs, tabulated_negator_word(rs.type()));
    sb.expect_root("v_2(a1) = a5", rs.simple_root(5), apply(rs, v2, rs.simple_root(1)));
    sb.expect_root("v_2(a3) = a6", rs.simple_root(6), apply(rs, v2, rs.simple_root(3)));
    sb.expect_root("v_2(a4) = a2+a3+2a4+a5", make_root(6, {{2, 1}, {3, 1}, {4, 2}, {5, 1}}),
                   apply(rs, v2, rs.simple_root(4)));
    const Root fixed = rs.highest() - rs.simple_root(2);
    sb.expect_root("v_2(highest - a2) fixed", fixed, apply(rs, v2, fixed));
    return sb.finish();
}

LemmaSuiteResult suite_e6_anchor() {
    SuiteBuilder sb("E6.anchor");
    const RootSystem rs = RootSystem::build("E6");
    const WeylElement v2 = from_word(rs, tabulated_negator_word(rs.type()));
    const WeylElement w0_no2 = longest_element(rs, Parabolic::all_but(6, {2}));
    sb.expect_root("w0_{S\\2}(a1) = -a6", -rs.simple_root(6), apply(rs, w0_no2, rs.simple_root(1)));
    sb.expect_root("w0_{S\\2}(a3) = -a5", -rs.simple_root(5), apply(rs, w0_no2, rs.simple_root(3)));
    sb.expect_root("w0_{S\\2}(a4) = -a4", -rs.simple_root(4), apply(rs, w0_no2, rs.simple_root(4)));
    sb.expect_root("w0_{S\\2} v_2(a4) = a1+a2+a3+a4+a5+a6",
                   make_root(6, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}),
                   apply(rs, w0_no2, apply(rs, v2, rs.simple_root(4))));
    for (int i : {2, 3, 4, 5}) {
        const Construction c = build_e(rs, i);
        sb.expect_nonsimple_positive(rs, "w_" + std::to_string(i) + "(a4) non-simple positive",
                                     apply(rs, c.element, rs.simple_root(4)));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e6_w0j_images() {
    SuiteBuilder sb("E6.w0J.images");
    const RootSystem rs = RootSystem::build("E6");
    const WeylElement v2 = from_word(rs, tabulated_negator_word(rs.type()));
    const WeylElement w0_no2 = longest_element(rs, Parabolic::all_but(6, {2}));
    const std::vector<TripleImage> table = {
        {3, {0, 1, 0, 1, 1, 1}, {0, 1, 1, 2, 2, 1}, {1, 0, 1, 1, 0, 0}},
        {4, {0, 1, 0, 0, 0, 0}, {1, 1, 2, 3, 2, 1}, {1, 1, 2, 3, 2, 1}},
        {5, {1, 1, 1, 1, 0, 0}, {1, 1, 2, 2, 1, 0}, {0, 0, 0, 1, 1, 1}},
    };
    for (const TripleImage& t : table) {
        const WeylElement w0_no2i = longest_element(rs, Parabolic::all_but(6, {2, t.i}));
        const std::string base = "w0_{S\\{2," + std::to_string(t.i) + "}}";
        const Root step1 = apply(rs, w0_no2i, rs.simple_root(2));
        sb.expect_root(base + "(a2)", Root(t.first), step1);
        const Root step2 = apply(rs, w0_no2, step1);
        sb.expect_root("w0_{S\\2} " + base + "(a2)", Root(t.second), step2);
        const Root step3 = apply(rs, v2, step2);
        sb.expect_root("v_2 w0_{S\\2} " + base + "(a2)", Root(t.third), step3);
    }
    for (int i : {3, 4, 5}) {
        const WeylElement w0_no2i = longest_element(rs, Parabolic::all_but(6, {2, i}));
        sb.expect_root("w0_{S\\{2," + std::to_string(i) + "}}(a" + std::to_string(i) + ")",
                       make_root(6, {{1, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}),
                       apply(rs, w0_no2i, rs.simple_root(i)));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e6_w_signs() {
    SuiteBuilder sb("E6.w.signs");
    const RootSystem rs = RootSystem::build("E6");
    for (int i : {2, 3, 4, 5}) {
        const Construction c = build_e(rs, i);
        const WeylElement winv = inverse(rs, c.element);
        const std::string wi = "w_" + std::to_string(i);
        for (int j = 1; j <= 6; ++j)
            sb.expect_sign(rs, wi + "^-1(a" + std::to_string(j) + ")", j != i,
                           apply(rs, winv, rs.simple_root(j)));
        sb.expect_root(wi + "^-1(highest) = -a2", -rs.simple_root(2),
                       apply(rs, winv, rs.highest()));
        const WeylElement fixer =
            product(longest_element(rs, Parabolic::all_but(6, {2})),
                    longest_element(rs, Parabolic::all_but(6, {2, i})));
        sb.expect_root("w0_{S\\2} w0_{S\\{2," + std::to_string(i) + "}}(highest) fixed",
                       rs.highest(), apply(rs, fixer, rs.highest()));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e7_v4_word() {
    SuiteBuilder sb("E7.v4.word");
    const RootSystem rs = RootSystem::build("E7");
    const Word word = tabulated_negator_word(rs.type());
    const WeylElement v4 = from_word(rs, word);
    sb.expect_true("v_4 word of 17 letters is reduced", length(rs, v4) == 17, "17",
                   std::to_string(length(rs, v4)));
    sb.expect_root("v_4^-1(highest) = -a4", -rs.simple_root(4), apply_inv(rs, v4, rs.highest()));
    const TransporterResult bfs = minimal_negator(rs, 4);
    sb.expect_true("v_4 equals the minimal negator of a4", bfs.element == v4, "matrix equality",
                   bfs.element == v4 ? "equal" : "different");
    return sb.finish();
}

LemmaSuiteResult suite_e7_v4_images() {
    SuiteBuilder sb("E7.v4.images");
    const RootSystem rs = RootSystem::build("E7");
    const WeylElement v4 = from_word(rs, tabulated_negator_word(rs.type()));
    const WeylElement v4inv = inverse(rs, v4);
    const WeylElement w0_no1 = longest_element(rs, Parabolic::all_but(7, {1}));
    for (int j = 2; j <= 7; ++j)
        sb.expect_root("w0_{S\\1}(a" + std::to_string(j) + ") = -a" + std::to_string(j),
                       -rs.simple_root(j), apply(rs, w0_no1, rs.simple_root(j)));
    sb.expect_root("v_4(a3) = a1+a2+a3+2a4+2a5+a6+a7",
                   Root({1, 1, 1, 2, 2, 1, 1}), apply(rs, v4, rs.simple_root(3)));
    // The tabulated image of w0_{S\1} v_4(a3) reads (1,1,2,1,1,1,0); composing
    // the two identities above forces coefficient 2 at a4. The corrected
    // value is asserted; the discrepancy is recorded below.
    const Root composite = apply(rs, w0_no1, apply(rs, v4, rs.simple_root(3)));
    sb.expect_root("w0_{S\\1} v_4(a3)", Root({1, 1, 2, 2, 1, 1, 0}), composite);
    sb.note("tabulated value for w0_{S\\1} v_4(a3) reads (1,1,2,1,1,1,0); the composite of the "
            "adjacent identities gives " + root_str(composite) +
            "; the downstream positivity claims are unaffected");
    const std::vector<std::pair<int, std::vector<int>>> images = {
        {1, {-1, -2, -2, -4, -3, -2, -1}},
        {2, {0, 0, 0, 0, 0, 0, 1}},
        {3, {0, 1, 0, 1, 1, 0, 0}},
        {4, {0, 0, 0, 0, 0, 1, 0}},
        {5, {0, 0, 1, 1, 1, 0, 0}},
        {6, {1, 0, 0, 0, 0, 0, 0}},
        {7, {0, 1, 1, 1, 0, 0, 0}},
    };
    for (const auto& [j, expect] : images)
        sb.expect_root("v_4^-1(a" + std::to_string(j) + ")", Root(expect),
                       apply(rs, v4inv, rs.simple_root(j)));
    return sb.finish();
}

LemmaSuiteResult suite_e7_anchor() {
    SuiteBuilder sb("E7.anchor");
    const RootSystem rs = RootSystem::build("E7");
    for (int i : {1, 2, 3, 4, 5, 6}) {
        const Construction c = build_e(rs, i);
        sb.expect_nonsimple_positive(rs, "w_" + std::to_string(i) + "(a3) non-simple positive",
                                     apply(rs, c.element, rs.simple_root(3)));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e7_w0j_images() {
    SuiteBuilder sb("E7.w0J.images");
    const RootSystem rs = RootSystem::build("E7");
    const WeylElement v4inv = inverse(rs, from_word(rs, tabulated_negator_word(rs.type())));
    const WeylElement w0_no1 = longest_element(rs, Parabolic::all_but(7, {1}));
    const std::vector<TripleImage> table = {
        {2, {1, 0, 1, 1, 1, 1, 1}, {1, 2, 2, 3, 2, 1, 0}, {0, 0, 0, 0, 1, 1, 1}},
        {3, {1, 0, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 3, 2, 1}, {1, 2, 2, 3, 3, 2, 1}},
        {4, {1, 0, 1, 0, 0, 0, 0}, {1, 2, 2, 4, 3, 2, 1}, {1, 1, 2, 2, 2, 2, 1}},
        {5, {1, 1, 1, 1, 0, 0, 0}, {1, 1, 2, 3, 3, 2, 1}, {1, 1, 2, 2, 2, 1, 0}},
        {6, {1, 1, 2, 2, 1, 0, 0}, {1, 1, 1, 2, 2, 2, 1}, {1, 0, 1, 0, 0, 0, 0}},
    };
    for (const TripleImage& t : table) {
        const WeylElement w0_no1i = longest_element(rs, Parabolic::all_but(7, {1, t.i}));
        const std::string base = "w0_{S\\{1," + std::to_string(t.i) + "}}";
        const Root step1 = apply(rs, w0_no1i, rs.simple_root(1));
        sb.expect_root(base + "(a1)", Root(t.first), step1);
        const Root step2 = apply(rs, w0_no1, step1);
        sb.expect_root("w0_{S\\1} " + base + "(a1)", Root(t.second), step2);
        const Root step3 = apply(rs, v4inv, step2);
        sb.expect_root("v_4^-1 w0_{S\\1} " + base + "(a1)", Root(t.third), step3);
    }
    return sb.finish();
}

LemmaSuiteResult suite_e7_w_signs() {
    SuiteBuilder sb("E7.w.signs");
    const RootSystem rs = RootSystem::build("E7");
    for (int i : {1, 2, 3, 4, 5, 6}) {
        const Construction c = build_e(rs, i);
        const WeylElement winv = inverse(rs, c.element);
        const std::string wi = "w_" + std::to_string(i);
        for (int j = 1; j <= 7; ++j)
            sb.expect_sign(rs, wi + "^-1(a" + std::to_string(j) + ")", j != i,
                           apply(rs, winv, rs.simple_root(j)));
        sb.expect_root(wi + "^-1(highest) = -a4", -rs.simple_root(4),
                       apply(rs, winv, rs.highest()));
        const WeylElement fixer =
            product(longest_element(rs, Parabolic::all_but(7, {1})),
                    longest_element(rs, Parabolic::all_but(7, {1, i})));
        sb.expect_root("w0_{S\\1} w0_{S\\{1," + std::to_string(i) + "}}(highest) fixed",
                       rs.highest(), apply(rs, fixer, rs.highest()));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e8_v6_word() {
    SuiteBuilder sb("E8.v6.word");
    const RootSystem rs = RootSystem::build("E8");
    const Word word = tabulated_negator_word(rs.type());
    const WeylElement v6 = from_word(rs, word);
    sb.expect_true("v_6 word of 29 letters is reduced", length(rs, v6) == 29, "29",
                   std::to_string(length(rs, v6)));
    sb.expect_root("v_6^-1(highest) = -a6", -rs.simple_root(6), apply_inv(rs, v6, rs.highest()));
    const TransporterResult bfs = minimal_negator(rs, 6);
    sb.expect_true("v_6 equals the minimal negator of a6", bfs.element == v6, "matrix equality",
                   bfs.element == v6 ? "equal" : "different");
    return sb.finish();
}

LemmaSuiteResult suite_e8_v6_images() {
    SuiteBuilder sb("E8.v6.images");
    const RootSystem rs = RootSystem::build("E8");
    const WeylElement v6 = from_word(rs, tabulated_negator_word(rs.type()));
    const WeylElement v6inv = inverse(rs, v6);
    const WeylElement w0_no8 = longest_element(rs, Parabolic::all_but(8, {8}));
    for (int j = 1; j <= 7; ++j)
        sb.expect_root("w0_{S\\8}(a" + std::to_string(j) + ") = -a" + std::to_string(j),
                       -rs.simple_root(j), apply(rs, w0_no8, rs.simple_root(j)));
    sb.expect_root("v_6(a7)", Root({1, 2, 3, 4, 3, 2, 1, 1}), apply(rs, v6, rs.simple_root(7)));
    sb.expect_root("w0_{S\\8} v_6(a7)", Root({1, 1, 1, 2, 2, 2, 2, 1}),
                   apply(rs, w0_no8, apply(rs, v6, rs.simple_root(7))));
    const std::vector<std::pair<int, std::vector<int>>> images = {
        {1, {0, 0, 0, 0, 0, 0, 0, 1}},
        {2, {0, 1, 0, 0, 0, 0, 0, 0}},
        {3, {0, 0, 0, 0, 1, 1, 1, 0}},
        {4, {0, 0, 0, 1, 0, 0, 0, 0}},
        {5, {0, 0, 1, 0, 0, 0, 0, 0}},
        {6, {1, 0, 0, 0, 0, 0, 0, 0}},
        {7, {0, 1, 1, 2, 2, 1, 0, 0}},
        {8, {-2, -3, -4, -6, -5, -4, -2, -1}},
    };
    for (const auto& [j, expect] : images)
        sb.expect_root("v_6^-1(a" + std::to_string(j) + ")", Root(expect),
                       apply(rs, v6inv, rs.simple_root(j)));
    return sb.finish();
}

LemmaSuiteResult suite_e8_anchor() {
    SuiteBuilder sb("E8.anchor");
    const RootSystem rs = RootSystem::build("E8");
    for (int i = 1; i <= 8; ++i) {
        const Construction c = build_e(rs, i);
        sb.expect_nonsimple_positive(rs, "w_" + std::to_string(i) + "(a7) non-simple positive",
                                     apply(rs, c.element, rs.simple_root(7)));
    }
    return sb.finish();
}

LemmaSuiteResult suite_e8_w0j_images() {
    SuiteBuilder sb("E8.w0J.images");
    const RootSystem rs = RootSystem::build("E8");
    const WeylElement v6inv = inverse(rs, from_word(rs, tabulated_negator_word(rs.type())));
    const WeylElement w0_no8 = longest_element(rs, Parabolic::all_but(8, {8}));
    const std::vector<TripleImage> table = {
        {1, {0, 1, 1, 2, 2, 2, 2, 1}, {2, 2, 3, 4, 3, 2, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 1}},
        {2, {1, 0, 1, 1, 1, 1, 1, 1}, {1, 3, 3, 5, 4, 3, 2, 1}, {1, 2, 2, 3, 2, 1, 1, 0}},
        {3, {0, 1, 0, 1, 1, 1, 1, 1}, {2, 2, 4, 5, 4, 3, 2, 1}, {1, 1, 2, 3, 3, 2, 2, 1}},
        {4, {0, 0, 0, 0, 1, 1, 1, 1}, {2, 3, 4, 6, 4, 3, 2, 1}, {1, 2, 2, 4, 3, 2, 2, 1}},
        {5, {0, 0, 0, 0, 0, 1, 1, 1}, {2, 3, 4, 6, 5, 3, 2, 1}, {1, 2, 3, 4, 3, 2, 2, 1}},
        {6, {0, 0, 0, 0, 0, 0, 1, 1}, {2, 3, 4, 6, 5, 4, 2, 1}, {2, 2, 3, 4, 3, 2, 2, 1}},
        {7, {0, 0, 0, 0, 0, 0, 0, 1}, {2, 3, 4, 6, 5, 4, 3, 1}, {2, 3, 4, 6, 5, 3, 2, 1}},
    };
    for (const TripleImage& t : table) {
        const WeylElement w0_noi8 = longest_element(rs, Parabolic::all_but(8, {t.i, 8}));
        const std::string base = "w0_{S\\{" + std::to_string(t.i) + ",8}}";
        const Root step1 = apply(rs, w0_noi8, rs.simple_root(8));
        sb.expect_root(base + "(a8)", Root(t.first), step1);
        const Root step2 = apply(rs, w0_no8, step1);
        sb.expect_root("w0_{S\\8} " + base + "(a8)", Root(t.second), step2);
        const Root step3 = apply(rs, v6inv, step2);
        sb.expect_root("v_6^-1 w0_{S\\8} " + base + "(a8)", Root(t.third), step3);
    }
    sb.note("two tabulated (ii)/(iii) lines label the inner subset with a5 where the item index "
            "requires a6 resp. a7; the values checked here follow the item index");
    return sb.finish();
}

LemmaSuiteResult suite_e8_w_signs() {
    SuiteBuilder sb("E8.w.signs");
    const RootSystem rs = RootSystem::build("E8");
    for (int i = 1; i <= 8; ++i) {
        const Construction c = build_e(rs, i);
        const WeylElement winv = inverse(rs, c.element);
        const std::string wi = "w_" + std::to_string(i);
        for (int j = 1; j <= 8; ++j)
            sb.expect_sign(rs, wi + "^-1(a" + std::to_string(j) + ")", j != i,
                           apply(rs, winv, rs.simple_root(j)));
        sb.expect_root(wi + "^-1(highest) = -a6", -rs.simple_root(6),
                       apply(rs, winv, rs.highest()));
        const WeylElement fixer =
            product(longest_element(rs, Parabolic::all_but(8, {8})),
                    longest_element(rs, Parabolic::all_but(8, {i, 8})));
        sb.expect_root("w0_{S\\8} w0_{S\\{" + std::to_string(i) + ",8}}(highest) fixed",
                       rs.highest(), apply(rs, fixer, rs.highest()));
    }
    return sb.finish();
}

}  // namespace

std::vector<std::string> lemma_suite_ids() {
    return {"D.u.images",   "D.v.words",    "D.v.images",  "D.w.images",  "D.w.signs",
            "E6.v2.word",   "E6.v2.images", "E6.anchor",   "E6.w0J.images", "E6.w.signs",
            "E7.v4.word",   "E7.v4.images", "E7.anchor",   "E7.w0J.images", "E7.w.signs",
            "E8.v6.word",   "E8.v6.images", "E8.anchor",   "E8.w0J.images", "E8.w.signs"};
}

LemmaSuiteResult verify_lemma_suite(const std::string& suite_id, int dn_rank) {
    if (suite_id.rfind("D.", 0) == 0 && dn_rank < 4)
        throw std::invalid_argument("D suites need rank >= 4");
    if (suite_id == "D.u.images") return suite_d_u_images(dn_rank);
    if (suite_id == "D.v.words") return suite_d_v_words(dn_rank);
    if (suite_id == "D.v.images") return suite_d_v_images(dn_rank);
    if (suite_id == "D.w.images") return suite_d_w_images(dn_rank);
    if (suite_id == "D.w.signs") return suite_d_w_signs(dn_rank);
    if (suite_id == "E6.v2.word") return suite_e6_v2_word();
    if (suite_id == "E6.v2.images") return suite_e6_v2_images();
    if (suite_id == "E6.anchor") return suite_e6_anchor();
    if (suite_id == "E6.w0J.images") return suite_e6_w0j_images();
    if (suite_id == "E6.w.signs") return suite_e6_w_signs();
    if (suite_id == "E7.v4.word") return suite_e7_v4_word();
    if (suite_id == "E7.v4.images") return suite_e7_v4_images();
    if (suite_id == "E7.anchor") return suite_e7_anchor();
    if (suite_id == "E7.w0J.images") return suite_e7_w0j_images();
    if (suite_id == "E7.w.signs") return suite_e7_w_signs();
    if (suite_id == "E8.v6.word") return suite_e8_v6_word();
    if (suite_id == "E8.v6.images") return suite_e8_v6_images();
    if (suite_id == "E8.anchor") return suite_e8_anchor();
    if (suite_id == "E8.w0J.images") return suite_e8_w0j_images();
    if (suite_id == "E8.w.signs") return suite_e8_w_signs();
    throw std::invalid_argument("unknown lemma suite: " + suite_id);
}

std::vector<LemmaSuiteResult> run_all_lemma_suites(int dn_max_rank) {
    std::vector<LemmaSuiteResult> out;
    for (const std::string& id : lemma_suite_ids()) {
        if (id.rfind("D.", 0) == 0) {
            for (int n = 4; n <= dn_max_rank; ++n) {
                LemmaSuiteResult r = verify_lemma_suite(id, n);
                r.suite_id += "@D" + std::to_string(n);
                out.push_back(std::move(r));
            }
        } else {
            out.push_back(verify_lemma_suite(id));
        }
    }
    return out;
}

}  // namespace schubaut
