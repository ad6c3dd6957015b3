#include <doctest.h>

#include <stdexcept>

#include "schubaut/constructions.hpp"
#include "schubaut/schubert.hpp"

using namespace schubaut;

TEST_CASE("D_n words") {
    CHECK(dn_u_word(4, 2) == Word{2, 3, 4, 2});
    CHECK(dn_u_word(6, 1) == Word{1, 2, 3, 4, 5, 6, 4, 3, 2, 1});
    CHECK(dn_v_word(4, 1) == Word{2, 3, 4, 2, 1});
    CHECK(dn_v_word(6, 2) == Word{2, 3, 4, 5, 6, 4, 3, 1, 2});
    CHECK_THROWS_AS(dn_u_word(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(dn_v_word(4, 2), std::invalid_argument);
}

TEST_CASE("build_dn assembles the tabulated products") {
    const RootSystem d4 = RootSystem::build("D4");
    const Construction c = build_dn(d4, 2);
    CHECK(c.ambient == Parabolic({2}));
    CHECK(c.element == from_word(d4, {2, 3, 4, 2, 1}));  // u_2 s_1

    const RootSystem d5 = RootSystem::build("D5");
    const Construction c3 = build_dn(d5, 3);
    CHECK(apply(d5, inverse(d5, c3.element), d5.simple_root(2)) == d5.simple_root(1));

    const RootSystem d6 = RootSystem::build("D6");
    const Construction c4 = build_dn(d6, 4);
    CHECK(apply(d6, c4.element, d6.simple_root(4)) == Root({1, 1, 1, 1, 0, 0}));

    CHECK_THROWS_AS(build_dn(d4, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_dn(d4, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_dn(RootSystem::build("A3"), 2), std::invalid_argument);
}

TEST_CASE("build_e degenerates to the negator at the adjoint node") {
    const RootSystem e6 = RootSystem::build("E6");
    const Construction c2 = build_e(e6, 2);
    CHECK(c2.ambient == Parabolic({4}));
    CHECK(c2.element == from_word(e6, tabulated_negator_word(e6.type())));

    const RootSystem e7 = RootSystem::build("E7");
    const Construction c1 = build_e(e7, 1);
    CHECK(c1.ambient == Parabolic({3}));
    CHECK(c1.element == from_word(e7, tabulated_negator_word(e7.type())));

    const RootSystem e8 = RootSystem::build("E8");
    const Construction c8 = build_e(e8, 8);
    CHECK(c8.ambient == Parabolic({7}));
    CHECK(c8.element == from_word(e8, tabulated_negator_word(e8.type())));

    CHECK_THROWS_AS(build_e(e6, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_e(e6, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_e(e7, 7), std::invalid_argument);
    CHECK_THROWS_AS(build_e(e6, 9), std::invalid_argument);
}

TEST_CASE("every construction is a verdict-true witness") {
    for (int n = 4; n <= 7; ++n) {
        const RootSystem rs = RootSystem::build(CartanType{'D', n});
        for (int i = 2; i <= n - 2; ++i) {
            const Construction c = build_dn(rs, i);
            const WitnessReport rep = verify_witness(rs, i, c.ambient, c.element);
            CHECK(rep.verdict);
        }
    }
    const RootSystem e6 = RootSystem::build("E6");
    for (int i : {2, 3, 4, 5}) {
        const Construction c = build_e(e6, i);
        CHECK(verify_witness(e6, i, c.ambient, c.element).verdict);
        // the witness rejects the highest root
        CHECK_FALSE(e6.is_positive(apply(e6, inverse(e6, c.element), e6.highest())));
    }
}

TEST_CASE("constructions scale past the default rank sweep") {
    const RootSystem d12 = RootSystem::build("D12");
    const Construction c = build_dn(d12, 7);
    CHECK(verify_witness(d12, 7, c.ambient, c.element).verdict);
    CHECK(apply(d12, c.element, d12.simple_root(7)) ==
          Root({1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}));
}

TEST_CASE("suite registry") {
    const auto ids = lemma_suite_ids();
    CHECK(ids.size() == 20);
    for (const char* required : {"D.u.images", "E6.v2.images", "E8.w.signs"})
        CHECK(std::find(ids.begin(), ids.end(), required) != ids.end());
    CHECK_THROWS_AS(verify_lemma_suite("E9.bogus"), std::invalid_argument);
}

TEST_CASE("named suites pass") {
    CHECK(verify_lemma_suite("E6.v2.images").all_pass);
    CHECK(verify_lemma_suite("D.u.images", 7).all_pass);
    CHECK(verify_lemma_suite("E8.w.signs").all_pass);
    CHECK(verify_lemma_suite("E7.w0J.images").all_pass);
    CHECK(verify_lemma_suite("D.v.images", 9).all_pass);
}

TEST_CASE("the full suite sweep passes and carries the discrepancy notes") {
    int notes = 0;
    for (const LemmaSuiteResult& suite : run_all_lemma_suites(10)) {
        CHECK(suite.all_pass);
        notes += static_cast<int>(suite.notes.size());
    }
    CHECK(notes > 0);  // tabulation discrepancies are documented, not silenced
}
