#include <doctest.h>

#include <stdexcept>

#include "schubaut/extremal.hpp"

using namespace schubaut;

TEST_CASE("dual Coxeter numbers") {
    CHECK(dual_coxeter(RootSystem::build("A2")) == 3);
    CHECK(dual_coxeter(RootSystem::build("A6")) == 7);
    CHECK(dual_coxeter(RootSystem::build("D4")) == 6);
    CHECK(dual_coxeter(RootSystem::build("D6")) == 10);
    CHECK(dual_coxeter(RootSystem::build("E6")) == 12);
    CHECK(dual_coxeter(RootSystem::build("E7")) == 18);
    CHECK(dual_coxeter(RootSystem::build("E8")) == 30);
    CHECK(dual_coxeter(RootSystem::build("B2")) == 3);
}

TEST_CASE("minimal transporter: examples") {
    const RootSystem a2 = RootSystem::build("A2");
    const TransporterResult u = minimal_transporter(a2, a2.simple_root(1));
    CHECK(u.element == simple_reflection(a2, 2));
    CHECK(u.length == 1);
    CHECK(u.unique);

    const TransporterResult top = minimal_transporter(a2, a2.highest());
    CHECK(top.element.is_identity());
    CHECK(top.length == 0);

    const RootSystem e6 = RootSystem::build("E6");
    CHECK(minimal_transporter(e6, e6.simple_root(2)).length == 10);

    CHECK_THROWS_AS(minimal_transporter(a2, Root({2, 0})), std::invalid_argument);
}

TEST_CASE("minimal negator: examples and factorisation") {
    const RootSystem a2 = RootSystem::build("A2");
    const TransporterResult v = minimal_negator(a2, 1);
    CHECK(v.element == from_word(a2, {2, 1}));
    CHECK(v.length == 2);
    CHECK(v.unique);

    const RootSystem e6 = RootSystem::build("E6");
    CHECK(minimal_negator(e6, 2).element == from_word(e6, {2, 4, 5, 3, 6, 4, 1, 3, 5, 4, 2}));

    const RootSystem e8 = RootSystem::build("E8");
    CHECK(minimal_negator(e8, 6).length == 29);

    for (const char* name : {"A4", "D5", "E6"}) {
        const RootSystem rs = RootSystem::build(name);
        for (int r = 1; r <= rs.rank(); ++r) {
            const TransporterResult u = minimal_transporter(rs, rs.simple_root(r));
            const TransporterResult w = minimal_negator(rs, r);
            CHECK(w.element == product(u.element, simple_reflection(rs, r)));
            CHECK(w.length == u.length + 1);
            CHECK(apply(rs, w.element, -rs.simple_root(r)) == rs.highest());
        }
    }
}

TEST_CASE("transporter words are reduced and verify their defining property") {
    const RootSystem d5 = RootSystem::build("D5");
    for (const Root& beta : d5.positives()) {
        const TransporterResult u = minimal_transporter(d5, beta);
        CHECK(length(d5, u.element) == u.length);
        CHECK(static_cast<int>(u.element.cached_word()->size()) == u.length);
        CHECK(apply(d5, u.element, beta) == d5.highest());
        CHECK(u.unique);
    }
}

TEST_CASE("B2: long roots transport, short roots are out of orbit") {
    const RootSystem b2 = RootSystem::build("B2");
    const TransporterResult u = minimal_transporter(b2, b2.simple_root(1));
    CHECK(u.length == dual_coxeter(b2) - 2);
    CHECK(u.element == simple_reflection(b2, 2));
    CHECK_THROWS_AS(minimal_transporter(b2, b2.simple_root(2)), std::invalid_argument);
    CHECK_THROWS_AS(minimal_negator(b2, 2), std::invalid_argument);
    // the long simple root still has a negator (length differs from ht in
    // the non-simply-laced case)
    CHECK(minimal_negator(b2, 1).length == 2);
}
