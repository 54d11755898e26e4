#include <doctest.h>

#include "clab/builders.hpp"

using namespace clab;

TEST_CASE("vertex counts") {
    // rows 1..2l-1 in the columns i <= r-1 and 1..l-1 in columns r, r+1: 3*3 + 2*1
    CHECK(build({Family::C, 4, 2}).size() == 11);
    CHECK(expected_vertex_count({Family::C, 4, 2}) == 11);
    CHECK(build({Family::G2, 2, 2}).size() == 8);
    for (int l = 2; l <= 5; ++l) {
        for (int r = 2; r <= 5; ++r) CHECK(build({Family::C, r, l}).size() == expected_vertex_count({Family::C, r, l}));
        CHECK(build({Family::F4, 4, l}).size() == expected_vertex_count({Family::F4, 4, l}));
        CHECK(build({Family::G2, 2, l}).size() == expected_vertex_count({Family::G2, 2, l}));
    }
}

TEST_CASE("built quivers are simple and skew") {
    for (int l = 2; l <= 4; ++l) {
        CHECK(build({Family::C, 3, l}).is_simple_skew());
        CHECK(build({Family::F4, 4, l}).is_simple_skew());
        CHECK(build({Family::G2, 2, l}).is_simple_skew());
    }
}

TEST_CASE("square product A_3 x A_3 has oriented squares") {
    const Quiver q = build({Family::SquareA, 3, 4});
    REQUIRE(q.size() == 9);
    CHECK(q.arrows().size() == 12);
    for (int c = 1; c <= 2; ++c)
        for (int r = 1; r <= 2; ++r) {
            const int a = q.at(c, r), b = q.at(c, r + 1), d = q.at(c + 1, r + 1), e = q.at(c + 1, r);
            const int around = q(a, b) + q(b, d) + q(d, e) + q(e, a);
            CHECK(std::abs(around) == 4);
        }
}

TEST_CASE("involutions are involutions") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 3, 3}, FamilySpec{Family::F4, 4, 2}, FamilySpec{Family::G2, 2, 3}}) {
        const Involutions inv = involutions(spec);
        const int n = build(spec).size();
        CHECK(compose(inv.omega, inv.omega) == identity_perm(n));
        if (inv.r) CHECK(compose(*inv.r, *inv.r) == identity_perm(n));
    }
}

TEST_CASE("G2: omega(Q) = nu_(13)(Q)^op exactly when h^vee + l is odd") {
    for (int l = 2; l <= 6; ++l) {
        const FamilySpec spec{Family::G2, 2, l};
        const Quiver q = build(spec);
        const Involutions inv = involutions(spec);
        const bool odd = (cartan_data(spec).h_dual + l) % 2 == 1;
        CAPTURE(l);
        CHECK((apply_perm(q, inv.omega) == opposite(apply_perm(q, inv.nu.at("321")))) == odd);
    }
}

TEST_CASE("Cartan data") {
    const CartanData c3 = cartan_data(Family::C, 3);
    CHECK(c3.h == 6);
    CHECK(c3.h_dual == 4);
    CHECK(c3.t == 2);
    CHECK(c3.t_a == std::vector<int>{2, 2, 1});
    const CartanData f4 = cartan_data(Family::F4);
    CHECK(f4.h == 12);
    CHECK(f4.h_dual == 9);
    const CartanData g2 = cartan_data(Family::G2);
    CHECK(g2.t == 3);
    CHECK(g2.h_dual == 4);
}

TEST_CASE("spec parsing and validation") {
    CHECK(parse_spec("C:3:2") == FamilySpec{Family::C, 3, 2});
    CHECK(parse_spec("G2:4") == FamilySpec{Family::G2, 2, 4});
    CHECK(parse_spec("D:4:3") == FamilySpec{Family::SquareD, 4, 3});
    CHECK_THROWS(parse_spec("C:3"));
    CHECK_THROWS(parse_spec("C:1:2"));
    CHECK_THROWS(parse_spec("G2:1"));
}
