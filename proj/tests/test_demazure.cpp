#include <doctest.h>

#include <stdexcept>

#include "schubaut/demazure.hpp"

using namespace schubaut;

namespace {

Character root_monomial(const RootSystem& rs, const Root& beta) {
    return Character::monomial(rs.to_weight(beta));
}

}  // namespace

TEST_CASE("one-step operator cases") {
    const RootSystem b2 = RootSystem::build("B2");
    const Root a1 = b2.simple_root(1), a2 = b2.simple_root(2);

    // k = 2: three-term string through zero
    Character expect = root_monomial(b2, a1);
    expect.add(Weight({0, 0}), 1);
    expect.add(b2.to_weight(-a1), 1);
    CHECK(demazure_step(b2, 1, root_monomial(b2, a1)) == expect);

    // k = -1 kills the term
    const RootSystem a2rs = RootSystem::build("A2");
    const Weight lam({-1, 1});
    CHECK(a2rs.pair(lam, 1) == -1);
    CHECK(demazure_step(a2rs, 1, Character::monomial(lam)).empty());

    // k = 0 fixes e^0
    const Character zero_wt = Character::monomial(Weight({0, 0}));
    CHECK(demazure_step(b2, 1, zero_wt) == zero_wt);

    // k <= -2 produces the negative string
    const Weight neg = b2.to_weight(-a1);  // pairing with alpha_1 is -2
    CHECK(b2.pair(neg, 1) == -2);
    Character virt;
    virt.add(Weight({0, 0}), -1);
    CHECK(demazure_step(b2, 1, Character::monomial(neg)) == virt);
}

TEST_CASE("composition along reduced words only") {
    const RootSystem b2 = RootSystem::build("B2");
    const Character chi = module_character(b2, Parabolic({2}));
    CHECK(demazure_apply(b2, {}, chi) == chi);
    CHECK_THROWS_AS(demazure_apply(b2, {1, 1}, chi), std::invalid_argument);

    const RootSystem a2 = RootSystem::build("A2");
    for (const Weight& lam : {Weight({1, 1}), Weight({2, 0}), Weight({3, 2})})
        CHECK(demazure_apply(a2, {1, 2, 1}, Character::monomial(lam)) ==
              demazure_apply(a2, {2, 1, 2}, Character::monomial(lam)));
}

TEST_CASE("dot action") {
    const RootSystem d4 = RootSystem::build("D4");
    for (int i = 1; i <= 4; ++i) {
        CHECK(dot_action(d4, i, Weight({0, 0, 0, 0})) == d4.to_weight(-d4.simple_root(i)));
        const Weight lam({1, -2, 3, 0});
        CHECK(dot_action(d4, i, dot_action(d4, i, lam)) == lam);
    }
    const RootSystem b2 = RootSystem::build("B2");
    CHECK(dot_action(b2, 1, b2.to_weight(b2.simple_root(1))) ==
          b2.to_weight(Root({-2, 0})));
}

TEST_CASE("module characters") {
    const RootSystem b2 = RootSystem::build("B2");
    Character expect;
    expect.add(b2.to_weight(Root({1, 0})), 1);
    expect.add(b2.to_weight(Root({1, 1})), 1);
    expect.add(b2.to_weight(Root({1, 2})), 1);
    CHECK(module_character(b2, Parabolic({2})) == expect);

    const RootSystem a2 = RootSystem::build("A2");
    CHECK(module_character(a2, Parabolic(std::vector<int>{})).dimension() == 3);

    const RootSystem d4 = RootSystem::build("D4");
    CHECK(module_character(d4, Parabolic::full(4)).empty());
}

TEST_CASE("adjoint characters") {
    CHECK(adjoint_character(RootSystem::build("B2")).dimension() == 10);
    CHECK(adjoint_character(RootSystem::build("E8")).dimension() == 248);
    CHECK(adjoint_character(RootSystem::build("A1")).dimension() == 3);
}

TEST_CASE("the B2 curve section of the tangent module is the adjoint representation") {
    const RootSystem b2 = RootSystem::build("B2");
    const WeylElement w = from_word(b2, {2, 1});
    const Character h0 = h0_module_character(b2, w, Parabolic({2}));
    CHECK(h0.dimension() == 10);
    CHECK(h0 == adjoint_character(b2));
    // identity element reproduces the module character itself
    CHECK(h0_module_character(b2, WeylElement::identity_element(2), Parabolic({2})) ==
          module_character(b2, Parabolic({2})));
    // strict mode rejects elements outside W^J
    CHECK_THROWS_AS(h0_module_character(b2, from_word(b2, {2}), Parabolic({2})),
                    std::invalid_argument);
}

TEST_CASE("canonical form drops zero multiplicities") {
    Character chi;
    chi.add(Weight({1, 0}), 2);
    chi.add(Weight({1, 0}), -2);
    CHECK(chi.empty());
    CHECK(chi == Character());
}
