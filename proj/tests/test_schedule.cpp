#include <doctest.h>

#include <algorithm>
#include <random>

#include "clab/schedule.hpp"

using namespace clab;

namespace {

std::vector<int> vertices_with(const Quiver& q, Fill f, std::initializer_list<Tag> tags) {
    std::vector<int> out;
    for (int v = 0; v < q.size(); ++v)
        for (Tag t : tags)
            if (q.meta()[v].fill == f && q.meta()[v].tag == t) out.push_back(v);
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("C steps at integer u mutate the plus circles and plus bullets") {
    for (int r = 2; r <= 4; ++r) {
        const Schedule s({Family::C, r, 3});
        const Quiver& q = s.initial();
        auto expected = vertices_with(q, Fill::circle, {Tag::plus});
        for (int v : vertices_with(q, Fill::bullet, {Tag::plus})) expected.push_back(v);
        for (int n = -8; n <= 8; n += 4) CHECK(sorted(s.mutation_set(n)) == sorted(expected));
    }
}

TEST_CASE("G2 step at u = 1/3 mutates region II circles and minus bullets") {
    const Schedule s({Family::G2, 2, 3});
    const Quiver& q = s.initial();
    auto expected = vertices_with(q, Fill::circle, {Tag::II});
    for (int v : vertices_with(q, Fill::bullet, {Tag::minus})) expected.push_back(v);
    CHECK(sorted(s.mutation_set(1)) == sorted(expected));
    CHECK(sorted(s.mutation_set(7)) == sorted(expected));
}

TEST_CASE("one period of composite steps returns the initial quiver") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::C, 4, 3}, FamilySpec{Family::F4, 4, 2},
                                  FamilySpec{Family::G2, 2, 2}, FamilySpec{Family::G2, 2, 4}}) {
        const Schedule s(spec);
        Quiver q = s.initial();
        for (int n = 0; n < s.cycle(); ++n) {
            q = composite_mutate(q, s.mutation_set(n));
            CHECK_NOTHROW(s.check_quiver(n + 1, q));
        }
        CHECK(q == s.initial());
    }
}

TEST_CASE("quiver cycle and labelings hold for every family") {
    for (int l = 2; l <= 5; ++l) {
        std::vector<FamilySpec> specs{{Family::F4, 4, l}, {Family::G2, 2, l}};
        for (int r = 2; r <= 5; ++r) specs.push_back({Family::C, r, l});
        for (const auto& spec : specs) {
            const Schedule s(spec);
            const int half = s.half_period_n();
            CAPTURE(spec.id());
            CHECK(check_schedule_cycle(s, -2 * half, 2 * half).ok);
            CHECK(check_labelings(s).ok);
        }
    }
}

TEST_CASE("the G2 cycle reading is the one-line notation") {
    const Schedule cycle({Family::G2, 2, 3}, CycleReading::cycle);
    CHECK_FALSE(check_schedule_cycle(cycle, 0, 6).ok);
    const Schedule one_line({Family::G2, 2, 3}, CycleReading::one_line);
    CHECK(check_schedule_cycle(one_line, 0, 6).ok);
}

TEST_CASE("a flipped initial quiver fails at the first composite step") {
    const Schedule s({Family::C, 3, 2});
    const Schedule flipped = s.with_initial(opposite(s.initial()));
    const CheckResult res = check_schedule_cycle(flipped, -4, 4);
    CHECK_FALSE(res.ok);
    CHECK(res.metrics["first_failure_step"] == "1/2");
}

TEST_CASE("label g for C_r, a <= r-1: (a, m, u - 1/2) -> ((a, m), u)") {
    const int r = 4;
    const Schedule s({Family::C, r, 3});
    for (int n = -10; n < 10; ++n)
        for (int a = 1; a <= r - 1; ++a)
            for (int m = 1; m <= 5; ++m) {
                const GridPoint p{a, m, n - 1};
                if (!is_P_plus(Family::C, r, p)) continue;
                CHECK(s.label_g(p) == std::pair<int, int>{s.initial().at(a, m), n});
            }
}

TEST_CASE("label g for G2, a = 1, m + u = 4/3 mod 2: (1, m, u - 1) -> ((2, m), u)") {
    const Schedule s({Family::G2, 2, 3});
    long hits = 0;
    for (int n = -18; n < 18; ++n)
        for (int m = 1; m <= 2; ++m) {
            if (floor_mod(3 * m + n, 6) != 4) continue;
            const GridPoint p{1, m, n - 3};
            REQUIRE(is_P_plus(Family::G2, 2, p));
            CHECK(s.label_g(p) == std::pair<int, int>{s.initial().at(2, m), n});
            ++hits;
        }
    CHECK(hits > 0);
}

TEST_CASE("g' and the mutation point labels are inverse on random grid points") {
    std::mt19937_64 rng(11);
    for (const FamilySpec spec : {FamilySpec{Family::C, 3, 3}, FamilySpec{Family::F4, 4, 3}, FamilySpec{Family::G2, 2, 3}}) {
        const Schedule s(spec);
        const auto points = s.grid(-60, 60, true);
        std::uniform_int_distribution<size_t> pick(0, points.size() - 1);
        for (int k = 0; k < 1000; ++k) {
            const GridPoint p = points[pick(rng)];
            const int v = s.label_g_prime(p);
            CHECK(s.is_p_plus(v, p.n));
            CHECK(s.mutation_point_label(v, p.n) == p);
        }
    }
}

TEST_CASE("parity classes") {
    // C_r: (a, m, u) in P'_+ iff (a, m, u +- 1/t_a) in P_+
    const int r = 3;
    for (int n = -12; n <= 12; ++n)
        for (int a = 1; a <= r; ++a)
            for (int m = 1; m <= 5; ++m) {
                const int step = a == r ? 2 : 1;
                const GridPoint p{a, m, n};
                const bool primed = is_Pprime_plus(Family::C, r, p);
                CHECK(primed == is_P_plus(Family::C, r, {a, m, n + step}));
                CHECK(primed == is_P_plus(Family::C, r, {a, m, n - step}));
            }
    CHECK(is_P_plus(Family::G2, 2, {1, 1, 0}));
}

TEST_CASE("only p_+ vertices are mutated") {
    const Schedule s({Family::F4, 4, 3});
    for (int n = -12; n < 12; ++n)
        for (int v = 0; v < s.initial().size(); ++v) {
            const auto& S = s.mutation_set(n);
            CHECK((std::find(S.begin(), S.end(), v) != S.end()) == s.is_p_plus(v, n));
        }
}

TEST_CASE("time formatting and parsing") {
    CHECK(format_time(-3, 2) == "-3/2");
    CHECK(format_time(4, 2) == "2");
    CHECK(format_time(-4, 6) == "-2/3");
    CHECK(parse_time("-1/2", 2) == -1);
    CHECK(parse_time("0.5", 2) == 1);
    CHECK(parse_time("-10/3", 3) == -10);
    CHECK_THROWS(parse_time("1/3", 2));
}
