#include <doctest.h>

#include <algorithm>
#include <random>

#include "clab/builders.hpp"
#include "clab/properties.hpp"
#include "clab/quiver.hpp"
#include "clab/schedule.hpp"

using namespace clab;

namespace {

Quiver from_arrows(int n, std::initializer_list<std::pair<int, int>> arrows) {
    Quiver q(n);
    for (auto [a, b] : arrows) q.add_arrow(a, b);
    return q;
}

}  // namespace

TEST_CASE("mutation is an involution on random quivers") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Quiver q = random_quiver(2 + static_cast<int>(seed % 9), seed);
        for (int k = 0; k < q.size(); ++k) CHECK(mutate(mutate(q, k), k) == q);
    }
}

TEST_CASE("mutation at the middle of a path reverses it and adds the shortcut") {
    const Quiver q = from_arrows(3, {{0, 1}, {1, 2}});
    const Quiver m = mutate(q, 1);
    CHECK(m(1, 0) == 1);
    CHECK(m(2, 1) == 1);
    CHECK(m(0, 2) == 1);
    CHECK(m.is_skew());
}

TEST_CASE("one composite step sends Q_2(C_2) to its opposite") {
    const Schedule s({Family::C, 2, 2});
    CHECK(composite_mutate(s.initial(), s.mutation_set(0)) == opposite(s.initial()));
}

TEST_CASE("two composite steps send Q_2(C_3) to r(Q)") {
    const Schedule s({Family::C, 3, 2});
    const Quiver q = s.initial();
    const Quiver two = composite_mutate(composite_mutate(q, s.mutation_set(0)), s.mutation_set(1));
    CHECK(two == apply_perm(q, *s.involutions().r));
}

TEST_CASE("composite mutation basics") {
    const Quiver q = random_quiver(6, 7);
    CHECK(composite_mutate(q, {}) == q);

    // three pairwise non-adjacent vertices, every order
    const Quiver d = from_arrows(6, {{0, 3}, {1, 3}, {4, 1}, {2, 5}, {5, 0}});
    std::vector<int> S{0, 1, 2};
    const Quiver ref = composite_mutate(d, S);
    do {
        CHECK(composite_mutate(d, S) == ref);
    } while (std::next_permutation(S.begin(), S.end()));

    CHECK_THROWS_AS(composite_mutate(d, {0, 3}), QuiverError);
}

TEST_CASE("opposite and permutations") {
    const Quiver q = random_quiver(7, 3);
    CHECK(opposite(opposite(q)) == q);
    CHECK(apply_perm(q, identity_perm(q.size())) == q);
    const VertexPermutation p{3, 0, 6, 1, 5, 2, 4};
    CHECK(apply_perm(apply_perm(q, p), inverse(p)) == q);
    CHECK(compose(p, inverse(p)) == identity_perm(7));
}

TEST_CASE("omega fixes Q_l(C_r) exactly when h^vee + l is even, and gives r(Q) otherwise") {
    for (int r = 2; r <= 5; ++r)
        for (int l = 2; l <= 5; ++l) {
            const FamilySpec spec{Family::C, r, l};
            const Quiver q = build(spec);
            const Involutions inv = involutions(spec);
            const Quiver w = apply_perm(q, inv.omega);
            CAPTURE(spec.id());
            if ((cartan_data(spec).h_dual + l) % 2 == 0) CHECK(w == q);
            else CHECK(w == apply_perm(q, *inv.r));
        }
}

TEST_CASE("find_isomorphism") {
    const Quiver q = build({Family::C, 3, 3});
    const auto self = find_isomorphism(q, q);
    REQUIRE(self);
    CHECK(apply_perm(q, *self) == q);

    for (int l = 2; l <= 4; ++l) {
        const FamilySpec spec{Family::G2, 2, l};
        const Quiver g = build(spec);
        const VertexPermutation nu12 = involutions(spec).nu.at("213");
        const auto p = find_isomorphism(g, apply_perm(g, nu12));
        REQUIRE(p);
        CHECK(*p == nu12);
    }

    Quiver doubled(2);
    doubled.set(0, 1, 2);
    CHECK_FALSE(find_isomorphism(doubled, from_arrows(2, {{0, 1}})));
    CHECK_FALSE(find_isomorphism(from_arrows(3, {{0, 1}, {1, 2}, {2, 0}}), from_arrows(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("quiver JSON round trip") {
    const Quiver q = build({Family::F4, 4, 2});
    const Quiver back = quiver_from_json(to_json(q));
    CHECK(back == q);
    CHECK(back.meta() == q.meta());
}

TEST_CASE("adding an arrow against an existing one throws") {
    Quiver q(2);
    q.add_arrow(0, 1);
    CHECK_THROWS_AS(q.add_arrow(1, 0), QuiverError);
}
