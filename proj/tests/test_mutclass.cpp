#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "clab/builders.hpp"
#include "clab/mutclass.hpp"
#include "clab/properties.hpp"

using namespace clab;

TEST_CASE("canonical key is invariant under vertex permutations") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 11;
        const Quiver q = random_quiver(n, rng(), 2, 0.5);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        REQUIRE(canonical_key(apply_perm(q, p)) == canonical_key(q));
    }
}

TEST_CASE("canonical key distinguishes a quiver from its opposite when they differ") {
    Quiver q(4);
    q.add_arrow(0, 1);
    q.add_arrow(1, 2);
    q.add_arrow(2, 0);
    q.add_arrow(0, 3);
    CHECK(canonical_key(q) != canonical_key(opposite(q)));
    Quiver doubled(2);
    doubled.set(0, 1, 2);
    Quiver single(2);
    single.add_arrow(0, 1);
    CHECK(canonical_key(doubled) != canonical_key(single));
}

TEST_CASE("G2 quiver: key agrees with its relabelled images") {
    const Quiver q = build({Family::G2, 2, 2});
    for (const std::array<int, 3> s : {std::array<int, 3>{2, 3, 1}, std::array<int, 3>{3, 1, 2}})
        CHECK(canonical_key(apply_perm(q, nu_permutation(q, s))) == canonical_key(q));
}

TEST_CASE("a quiver is equivalent to itself by the empty path") {
    const Quiver q = build({Family::C, 3, 2});
    const auto path = search_equivalence(q, q);
    REQUIRE(path);
    CHECK(path->moves.empty());
    CHECK(verify_path(*path, q).ok);
}

TEST_CASE("mutation equivalences are found and verified") {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"C:3:2", "D:4:3"}, {"C:2:3", "A:3:4"}, {"G2:2", "C:3:2"}};
    for (const auto& [l, r] : pairs) {
        const Quiver q1 = build(parse_spec(l));
        const Quiver q2 = build(parse_spec(r));
        SearchStats stats;
        const auto path = search_equivalence(q1, q2, {}, &stats);
        CAPTURE(l);
        REQUIRE(path);
        CHECK_FALSE(stats.exhausted);
        CHECK(verify_path(*path, q2).ok);
        CHECK(canonical_key(replay(*path)) == canonical_key(q2));
    }
}

TEST_CASE("exhausted caps give no path") {
    const Quiver q1 = build(parse_spec("C:3:2"));
    const Quiver q2 = build(parse_spec("D:4:3"));
    SearchOptions opt;
    opt.depth_cap = 0;
    SearchStats stats;
    CHECK_FALSE(search_equivalence(q1, q2, opt, &stats));
    CHECK(stats.exhausted);
}
