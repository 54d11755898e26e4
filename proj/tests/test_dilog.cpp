#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clab/dilog.hpp"

using namespace clab;

namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

const ConstantRelation& relation_at(const std::vector<ConstantRelation>& rels, YIndex lhs) {
    for (const auto& r : rels)
        if (r.lhs == lhs) return r;
    FAIL("no relation for the index");
    return rels.front();
}

}  // namespace

TEST_CASE("Rogers dilogarithm special values") {
    CHECK(rogers_L(0.0) == 0.0);
    CHECK(std::abs(rogers_L(1.0) - pi2 / 6) < 1e-12);
    CHECK(std::abs(rogers_L(0.5) - pi2 / 12) < 1e-12);
    CHECK(std::abs(rogers_L_quadrature(0.5) - pi2 / 12) < 1e-12);
    for (double x : {0.01, 0.2, 0.37, 0.8, 0.999})
        CHECK(std::abs(rogers_L(x) - rogers_L_quadrature(x)) < 1e-12);
    CHECK_THROWS_AS(rogers_L(-0.1), DilogError);
    CHECK_THROWS_AS(rogers_L(1.5), DilogError);
}

TEST_CASE("constant relations accumulated from the Y-system") {
    SUBCASE("C3, level 2: (3,1)") {
        const auto rels = constant_relations({Family::C, 3, 2});
        const auto& rel = relation_at(rels, {3, 1});
        CHECK(rel.plus_factors == std::map<YIndex, int>{{{2, 1}, 1}, {{2, 2}, 2}, {{2, 3}, 1}});
    }
    SUBCASE("G2, level 3: (1,1)") {
        const auto rels = constant_relations({Family::G2, 2, 3});
        const auto& rel = relation_at(rels, {1, 1});
        CHECK(rel.plus_factors ==
              std::map<YIndex, int>{{{2, 1}, 1}, {{2, 2}, 2}, {{2, 3}, 3}, {{2, 4}, 2}, {{2, 5}, 1}});
    }
}

TEST_CASE("the constant Y-system solution is positive and solves the relations") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::C, 4, 3},
                                  FamilySpec{Family::F4, 4, 2}, FamilySpec{Family::G2, 2, 4}}) {
        const ConstantYSolution sol = solve_constant_Y(spec);
        CAPTURE(spec.id());
        CHECK(sol.max_residual < 1e-12);
        CHECK(constant_residual(constant_relations(spec), sol.values) < 1e-12);
        for (const auto& [idx, v] : sol.values) CHECK(v > 0.0);
    }
}

TEST_CASE("central charges") {
    CHECK(central_charge({Family::G2, 2, 2}) == doctest::Approx(8.0 / 3));
    CHECK(central_charge({Family::C, 2, 2}) == doctest::Approx(2.0));
    CHECK(central_charge({Family::F4, 4, 2}) == doctest::Approx(60.0 / 11));
    for (const FamilySpec spec : {FamilySpec{Family::C, 3, 4}, FamilySpec{Family::F4, 4, 3},
                                  FamilySpec{Family::G2, 2, 5}})
        CHECK(central_charge(spec) == doctest::Approx(central_charge_dim(spec)));
}

TEST_CASE("constant dilogarithm identity") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::C, 3, 3},
                                  FamilySpec{Family::F4, 4, 2}, FamilySpec{Family::G2, 2, 2},
                                  FamilySpec{Family::G2, 2, 5}}) {
        const CheckResult res = check_DI(spec, 1e-8);
        CAPTURE(res.summary());
        CHECK(res.ok);
    }
}

TEST_CASE("functional dilogarithm identities") {
    SUBCASE("C2, level 2") {
        const FamilySpec spec{Family::C, 2, 2};
        const Schedule s(spec);
        const SignCounts counts = count_signs(run_tropical(s));
        CHECK(functional_rhs(spec) == std::pair<long, long>{40, 40});
        std::vector<NumericRun> runs;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) runs.push_back(run_numeric(s, seed, CoefficientMode::tracked));
        const FunctionalSums sums = functional_sums(runs.front());
        CHECK(std::abs(sums.y_sum - 20.0) < 1e-6);
        CHECK(std::abs(sums.inv_sum - 20.0) < 1e-6);
        CHECK(check_functional_DI(runs, counts, 1e-6).ok);
    }
    SUBCASE("G2, level 2") {
        const FamilySpec spec{Family::G2, 2, 2};
        const Schedule s(spec);
        const SignCounts counts = count_signs(run_tropical(s));
        CHECK(functional_rhs(spec).second == 120);
        std::vector<NumericRun> runs{run_numeric(s, 7, CoefficientMode::tracked)};
        const FunctionalSums sums = functional_sums(runs.front());
        CHECK(std::abs(sums.inv_sum - 60.0) < 1e-6);
        CHECK(std::abs(sums.y_sum + sums.inv_sum - (counts.positive + counts.negative)) < 1e-6);
        CHECK(check_functional_DI(runs, counts, 1e-6).ok);
    }
}
