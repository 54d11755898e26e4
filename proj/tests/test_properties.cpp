#include <doctest.h>

#include "clab/properties.hpp"

using namespace clab;

TEST_CASE("random quivers are skew-symmetric and reproducible") {
    const Quiver a = random_quiver(8, 42);
    CHECK(a.is_skew());
    CHECK(random_quiver(8, 42).same_matrix(a));
}

TEST_CASE("mutation is an involution and commutes with the opposite") {
    const CheckResult res = check_mutation_involution(500, 3);
    CHECK(res.ok);
    CHECK(res.checked == 1500);
}

TEST_CASE("composite mutations are order independent") {
    for (const char* spec : {"C:3:2", "F4:2", "G2:3"}) CHECK(check_composite_order(parse_spec(spec), 5, 1).ok);
}

TEST_CASE("sigma involutions on every root system in use") {
    CHECK(check_all_sigma_involutions(6).ok);
}

TEST_CASE("Rogers dilogarithm reflection on a grid") {
    const CheckResult res = check_rogers_reflection(1000, 1e-12);
    CHECK(res.ok);
    CHECK(res.metrics["max_library_vs_quadrature"].get<double>() < 1e-12);
}

TEST_CASE("constant Y-system converges to one point") {
    CHECK(check_constant_Y_uniqueness(parse_spec("C:2:3"), 10).ok);
    CHECK(check_constant_Y_uniqueness(parse_spec("G2:2"), 10).ok);
}

TEST_CASE("level-rank duality N+(r,l) = N-(l,r)") {
    LevelRankCounts counts;
    for (int r = 2; r <= 3; ++r)
        for (int l = 2; l <= 3; ++l) counts[{r, l}] = count_signs(run_tropical(Schedule({Family::C, r, l})));
    const CheckResult res = check_level_rank(counts);
    CHECK(res.ok);
    CHECK(res.metrics["pairs"] == 4);

    LevelRankCounts broken = counts;
    broken[{2, 3}].positive += 1;
    CHECK_FALSE(check_level_rank(broken).ok);
}

TEST_CASE("point count matches the number of mutation points") {
    const FamilySpec spec{Family::F4, 4, 2};
    const SignCounts counts = count_signs(run_tropical(Schedule(spec)));
    CHECK(check_point_count(spec, counts).ok);
    SignCounts wrong = counts;
    wrong.mixed = 1;
    CHECK_FALSE(check_point_count(spec, wrong).ok);
}
