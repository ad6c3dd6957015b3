#include <doctest.h>

#include <random>
#include <stdexcept>

#include <set>

#include "schubaut/errors.hpp"
#include "schubaut/weyl.hpp"

using namespace schubaut;

namespace {

// Independent oracle: the W-orbit of a weight under the reflection action,
// grown by plain breadth-first closure. |W / Stab(omega_r)| = orbit size.
std::size_t weight_orbit_size(const RootSystem& rs, const Weight& start) {
    std::set<std::vector<int>> orbit{start.fw};
    std::vector<Weight> frontier{start};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (int i = 1; i <= rs.rank(); ++i) {
                Weight image = rs.reflect(i, w);
                if (orbit.insert(image.fw).second) next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    return orbit.size();
}

}  // namespace

TEST_CASE("words compose right-to-left and satisfy the braid relation") {
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(from_word(a2, {1, 2, 1}) == from_word(a2, {2, 1, 2}));
    CHECK(from_word(a2, {}).is_identity());
    CHECK(from_word(a2, {1, 1}).is_identity());
    // cached words are kept verbatim
    CHECK(*from_word(a2, {1, 1, 2}).cached_word() == Word{1, 1, 2});
    CHECK_THROWS_AS(from_word(a2, {3}), std::invalid_argument);
}

TEST_CASE("apply: simple images and the tabulated E6 negator") {
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(apply(a2, simple_reflection(a2, 1), a2.simple_root(1)) == -a2.simple_root(1));
    CHECK(apply(a2, from_word(a2, {2}), a2.simple_root(1)) == Root({1, 1}));

    const RootSystem e6 = RootSystem::build("E6");
    const WeylElement v2 = from_word(e6, {2, 4, 5, 3, 6, 4, 1, 3, 5, 4, 2});
    CHECK(apply(e6, inverse(e6, v2), e6.highest()) == -e6.simple_root(2));
    CHECK(apply(e6, v2, e6.simple_root(4)) == Root({0, 1, 1, 2, 1, 0}));
    CHECK_THROWS_AS(apply(a2, simple_reflection(a2, 1), Root({2, 1})), std::invalid_argument);
}

TEST_CASE("length equals inversion count and reduced-word length") {
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(length(a2, WeylElement::identity_element(2)) == 0);
    const WeylElement w0 = longest_element(a2, Parabolic::full(2));
    CHECK(length(a2, w0) == 3);
    CHECK(reduced_word(a2, w0).size() == 3);
    CHECK(reduced_word(a2, WeylElement::identity_element(2)).empty());
    CHECK(reduced_word(a2, from_word(a2, {1, 1, 2})) == Word{2});

    const RootSystem e8 = RootSystem::build("E8");
    const WeylElement v6 = from_word(e8, {8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6, 4, 2, 5,
                                          7, 4, 6, 5, 3, 4, 2, 8, 7, 1, 3, 4, 5, 6});
    CHECK(length(e8, v6) == 29);
    CHECK(inversions(e8, v6).size() == 29);
}

TEST_CASE("inverse and products") {
    const RootSystem d4 = RootSystem::build("D4");
    const WeylElement w = from_word(d4, {2, 3, 4, 2, 1});
    const WeylElement winv = inverse(d4, w);
    CHECK(product(w, winv).is_identity());
    for (const Root& beta : d4.positives())
        CHECK(apply(d4, winv, apply(d4, w, beta)) == beta);
}

TEST_CASE("parabolic longest elements") {
    const RootSystem a3 = RootSystem::build("A3");
    CHECK(longest_element(a3, Parabolic(std::vector<int>{})).is_identity());
    CHECK(longest_element(a3, Parabolic({2})) == simple_reflection(a3, 2));
    const RootSystem e7 = RootSystem::build("E7");
    const WeylElement w0J = longest_element(e7, Parabolic::all_but(7, {1}));
    for (int i = 2; i <= 7; ++i)
        CHECK(apply(e7, w0J, e7.simple_root(i)) == -e7.simple_root(i));
    // full longest element sends every positive root negative
    const RootSystem d4 = RootSystem::build("D4");
    const WeylElement w0 = longest_element(d4, Parabolic::full(4));
    for (const Root& beta : d4.positives())
        CHECK_FALSE(d4.is_positive(apply(d4, w0, beta)));
    CHECK(length(d4, w0) == 12);
}

TEST_CASE("coset decomposition") {
    const RootSystem a2 = RootSystem::build("A2");
    const Parabolic J({2});
    const auto [up, down] = coset_decompose(a2, from_word(a2, {1, 2}), J);
    CHECK(up == from_word(a2, {1}));
    CHECK(down == from_word(a2, {2}));

    const auto [eu, ed] = coset_decompose(a2, WeylElement::identity_element(2), J);
    CHECK(eu.is_identity());
    CHECK(ed.is_identity());

    const RootSystem d4 = RootSystem::build("D4");
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<int> s;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        const Parabolic Jm(s);
        const WeylElement w0 = longest_element(d4, Parabolic::full(4));
        const auto [w0J, w0_down] = coset_decompose(d4, w0, Jm);
        CHECK(w0_down == longest_element(d4, Jm));
        CHECK(w0J == product(w0, longest_element(d4, Jm)));
        CHECK(length(d4, w0J) + length(d4, w0_down) == length(d4, w0));
        // idempotence on the first component
        const auto [again, rest] = coset_decompose(d4, w0J, Jm);
        CHECK(again == w0J);
        CHECK(rest.is_identity());
    }
}

TEST_CASE("min_reps: examples, order, determinism") {
    const RootSystem a2 = RootSystem::build("A2");
    const auto reps = min_reps(a2, Parabolic({2}));
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].is_identity());
    CHECK(reps[1] == from_word(a2, {1}));
    CHECK(reps[2] == from_word(a2, {2, 1}));
    for (const WeylElement& w : reps) CHECK(in_min_coset_reps(a2, w, Parabolic({2})));

    const RootSystem a3 = RootSystem::build("A3");
    CHECK(min_reps(a3, Parabolic(std::vector<int>{})).size() == 24);

    // non-decreasing length, lexicographic matrices within a length level
    const auto all = min_reps(a3, Parabolic({1, 3}));
    for (std::size_t k = 1; k < all.size(); ++k) {
        const int la = length(a3, all[k - 1]);
        const int lb = length(a3, all[k]);
        CHECK(la <= lb);
        if (la == lb) CHECK(all[k - 1].matrix() < all[k].matrix());
    }
}

TEST_CASE("min_reps cap raises the distinct too-large signal") {
    const RootSystem a3 = RootSystem::build("A3");
    CHECK_THROWS_AS(min_reps(a3, Parabolic(std::vector<int>{}), 10), EnumerationTooLarge);
    try {
        min_reps(a3, Parabolic(std::vector<int>{}), 10);
    } catch (const EnumerationTooLarge& e) {
        CHECK(e.partial_count() == 10);
        CHECK(e.cap() == 10);
        CHECK(e.scope().find("A3") != std::string::npos);
    }
}

TEST_CASE("|W^J| for E8 minus its adjoint node is the root count") {
    const RootSystem e8 = RootSystem::build("E8");
    const auto reps = min_reps(e8, Parabolic::all_but(8, {8}));
    CHECK(reps.size() == 240);
    CHECK(weight_orbit_size(e8, e8.fundamental_weight(8)) == 240);
}

TEST_CASE("coset counts match weight-orbit sizes") {
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(min_reps(a2, Parabolic::all_but(2, {1})).size() ==
          weight_orbit_size(a2, a2.fundamental_weight(1)));
    const RootSystem d4 = RootSystem::build("D4");
    CHECK(min_reps(d4, Parabolic::all_but(4, {1})).size() ==
          weight_orbit_size(d4, d4.fundamental_weight(1)));
    const RootSystem e6 = RootSystem::build("E6");
    CHECK(min_reps(e6, Parabolic::all_but(6, {6})).size() == 27);
    CHECK(weight_orbit_size(e6, e6.fundamental_weight(6)) == 27);
}

TEST_CASE("diagram automorphism") {
    CHECK(diagram_automorphism(RootSystem::build("D4")) == std::vector<int>{1, 2, 3, 4});
    CHECK(diagram_automorphism(RootSystem::build("A2")) == std::vector<int>{2, 1});
    CHECK(diagram_automorphism(RootSystem::build("E6")) == std::vector<int>{6, 2, 5, 4, 3, 1});
    CHECK(diagram_automorphism(RootSystem::build("D5")) == std::vector<int>{1, 2, 3, 5, 4});
    CHECK(diagram_automorphism(RootSystem::build("E7")) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(diagram_automorphism(RootSystem::build("B2")) == std::vector<int>{1, 2});
    // cross-check: w_0(alpha_1) = -alpha_6 in E6
    const RootSystem e6 = RootSystem::build("E6");
    CHECK(apply(e6, longest_element(e6, Parabolic::full(6)), e6.simple_root(1)) ==
          -e6.simple_root(6));
}

TEST_CASE("coset decomposition is valid on random elements") {
    const RootSystem d5 = RootSystem::build("D5");
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> letter(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Word word(trial % 17);
        for (int& x : word) x = letter(rng);
        const WeylElement w = from_word(d5, word);
        for (const Parabolic& J : {Parabolic({2}), Parabolic({1, 4}), Parabolic({3, 4, 5})}) {
            const auto [up, down] = coset_decompose(d5, w, J);
            CHECK(product(up, down) == w);
            CHECK(in_min_coset_reps(d5, up, J));
            CHECK(length(d5, up) + length(d5, down) == length(d5, w));
            for (const Root& beta : inversions(d5, down)) CHECK(d5.in_subsystem(beta, J));
        }
    }
}

TEST_CASE("corrupted elements are detected on application") {
    const RootSystem a2 = RootSystem::build("A2");
    IntMatrix bogus = IntMatrix::identity(2);
    bogus.at(0, 0) = 3;  // not a root-table automorphism
    CHECK_THROWS_AS(apply(a2, WeylElement(bogus), a2.simple_root(1)), std::logic_error);
}

TEST_CASE("cached words reproduce their matrices") {
    const RootSystem d4 = RootSystem::build("D4");
    const WeylElement w0J = longest_element(d4, Parabolic({2, 3, 4}));
    REQUIRE(w0J.cached_word());
    CHECK(from_word(d4, *w0J.cached_word()) == w0J);
    const WeylElement prod = product(from_word(d4, {1, 2}), from_word(d4, {3, 4}));
    REQUIRE(prod.cached_word());
    CHECK(*prod.cached_word() == Word{1, 2, 3, 4});
    CHECK(from_word(d4, *prod.cached_word()) == prod);
}

TEST_CASE("weight application agrees with the reflection action") {
    const RootSystem b2 = RootSystem::build("B2");
    const WeylElement w = from_word(b2, {2, 1});
    Weight lambda({1, 2});
    Weight via_word = lambda;
    via_word = b2.reflect(1, via_word);
    via_word = b2.reflect(2, via_word);
    CHECK(apply(b2, w, lambda) == via_word);
}
