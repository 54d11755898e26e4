#include <doctest.h>

#include <set>

#include "clab/tropical.hpp"

using namespace clab;

TEST_CASE("tropical mutation is an involution") {
    const Schedule s({Family::F4, 4, 2});
    const TropSeed seed = TropSeed::initial(s.initial());
    for (int k = 0; k < s.initial().size(); ++k) {
        const TropSeed back = trop_y_mutate(trop_y_mutate(seed, k), k);
        CHECK(back.y == seed.y);
        CHECK(back.Q == seed.Q);
    }
}

TEST_CASE("rank 2: mutation at the source multiplies the target coefficient") {
    Quiver q(2);
    q.add_arrow(0, 1);
    const TropSeed m = trop_y_mutate(TropSeed::initial(q), 0);
    CHECK(m.y[1] == TropMonomial{1, 1});
    CHECK(m.y[0] == TropMonomial{-1, 0});
}

TEST_CASE("Q_2(C_2): mutated monomials are positive on 0 <= u < 2") {
    const Schedule s({Family::C, 2, 2});
    const TropicalRun run = run_tropical(s);
    for (int n = 0; n < 4; ++n)
        for (int v : s.mutation_set(n)) CHECK(sign_of(run.y(v, n)) == Sign::positive);
}

TEST_CASE("sign_of and specialize") {
    CHECK(sign_of({0, 0, 0}) == Sign::unit);
    CHECK(sign_of({1, 0, 2}) == Sign::positive);
    CHECK(sign_of({0, -1, 0}) == Sign::negative);
    CHECK(sign_of({1, -1, 0}) == Sign::mixed);
    const TropMonomial m{3, -1, 2, 0};
    CHECK(specialize(m, {}) == m);
    CHECK(sign_of(specialize({0, 2, 0, -1}, {1, 3})) == Sign::unit);
    CHECK(invert(m) == TropMonomial{-3, 1, -2, 0});
}

TEST_CASE("C_r at level 2: y_{i i'}(2) = y_{i, 4-i'}^{-1} for i <= r-1") {
    for (int r = 2; r <= 5; ++r) {
        const Schedule s({Family::C, r, 2});
        const TropicalRun run = run_tropical(s);
        const Quiver& q = s.initial();
        for (int i = 1; i <= r - 1; ++i)
            for (int ip = 1; ip <= 3; ++ip)
                CHECK(run.y(q.at(i, ip), 4) == invert(generator(q.size(), q.at(i, 4 - ip))));
    }
}

TEST_CASE("G2: y(-h^vee) is the inverse of the initial tuple") {
    for (int l = 2; l <= 4; ++l) {
        const Schedule s({Family::G2, 2, l});
        const TropicalRun run = run_tropical(s);
        const int n = -3 * 4;
        for (int v = 0; v < s.initial().size(); ++v) CHECK(run.y(v, n) == invert(generator(s.initial().size(), v)));
    }
}

TEST_CASE("F4: y_{i i'}(-h^vee) = y_{7-i, i'}^{-1} for i in {1, 2, 5, 6}") {
    for (int l = 2; l <= 3; ++l) {
        const Schedule s({Family::F4, 4, l});
        const TropicalRun run = run_tropical(s);
        const Quiver& q = s.initial();
        for (int i : {1, 2, 5, 6})
            for (int ip = 1; ip <= l - 1; ++ip)
                CHECK(run.y(q.at(i, ip), -18) == invert(generator(q.size(), q.at(7 - i, ip))));
    }
}

TEST_CASE("G2: rows (4, i'), i' not divisible by 3, are positive exactly at the listed negative times") {
    const std::set<int> listed{-3, -4, -5, -8, -9, -10};  // u = -1, -4/3, -5/3, -8/3, -3, -10/3
    for (int l = 2; l <= 4; ++l) {
        const Schedule s({Family::G2, 2, l});
        const TropicalRun run = run_tropical(s);
        std::set<int> positive_at;
        for (int n = -12; n < 0; ++n)
            for (int v : s.mutation_set(n)) {
                const auto& m = s.initial().meta()[v];
                if (m.col != 4 || m.row % 3 == 0) continue;
                const Sign sg = sign_of(run.y(v, n));
                CHECK((sg == Sign::positive || sg == Sign::negative));
                if (sg == Sign::positive) positive_at.insert(n);
            }
        CHECK(positive_at == listed);
    }
}

TEST_CASE("sign counts") {
    auto counts = [](FamilySpec spec) { return count_signs(run_tropical(Schedule(spec))); };
    const SignCounts c2 = counts({Family::C, 2, 2});
    CHECK(c2.positive == 20);
    CHECK(c2.negative == 20);
    const SignCounts f4 = counts({Family::F4, 4, 2});
    CHECK(f4.positive == 56);
    CHECK(f4.negative == 120);
    const SignCounts g2 = counts({Family::G2, 2, 2});
    CHECK(g2.positive == 60);
    CHECK(g2.negative == 48);
    for (int r = 2; r <= 4; ++r)
        for (int l = 2; l <= 4; ++l) {
            const FamilySpec spec{Family::C, r, l};
            const SignCounts c = counts(spec);
            CHECK(std::pair<long, long>{c.positive, c.negative} == expected_sign_counts(spec));
            CHECK(c.positive + c.negative == expected_point_count(spec));
            CHECK(c.unit + c.mixed == 0);
        }
}

TEST_CASE("tropical periodicity, sign pattern and boundary tuples") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::C, 3, 4}, FamilySpec{Family::F4, 4, 3},
                                  FamilySpec{Family::G2, 2, 3}}) {
        const Schedule s(spec);
        const TropicalRun run = run_tropical(s);
        CAPTURE(spec.id());
        CHECK(check_tropical_periodicity(run).ok);
        CHECK(check_sign_pattern(run).ok);
        CHECK(check_boundary_tuples(run).ok);
    }
}

TEST_CASE("C_2 at level 2 has full period 10 and G2 at level 3 half period 7 with omega") {
    {
        const Schedule s({Family::C, 2, 2});
        const TropicalRun run = run_tropical(s);
        CHECK(s.half_period_u() == 5);
        for (int n = -6; n < 10; ++n) CHECK(run.tuple(n) == run.tuple(n + 20));
        // a shift by zero is the identity; a shift by a quarter period is not
        CHECK(run.tuple(3) == run.tuple(3));
        CHECK(run.tuple(0) != run.tuple(5));
    }
    {
        const Schedule s({Family::G2, 2, 3});
        const TropicalRun run = run_tropical(s);
        CHECK(s.half_period_u() == 7);
        const auto& omega = s.involutions().omega;
        for (int n = 0; n < 21; ++n)
            for (int v = 0; v < s.initial().size(); ++v) CHECK(run.y(omega[v], n + 21) == run.y(v, n));
    }
}
