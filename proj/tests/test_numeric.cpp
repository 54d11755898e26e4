#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "clab/numeric.hpp"

using namespace clab;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("G function: C_3 at (3, 1, u) has the single factor T^(2)_2(u)") {
    CHECK(g_terms({Family::C, 3, 3}, {3, 1, 0}) == std::vector<GridPoint>{{2, 2, 0}});
}

TEST_CASE("G function: G2 at (2, 1, u) keeps only T^(1)_1(u)") {
    CHECK(g_terms({Family::G2, 2, 3}, {2, 1, 0}) == std::vector<GridPoint>{{1, 1, 0}});
    auto three = g_terms({Family::G2, 2, 3}, {2, 3, 0});
    std::sort(three.begin(), three.end());
    CHECK(three == std::vector<GridPoint>{{1, 1, -2}, {1, 1, 0}, {1, 1, 2}});
}

TEST_CASE("the transpose of G is consistent with G") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 4, 3}, FamilySpec{Family::F4, 4, 3}, FamilySpec{Family::G2, 2, 3}}) {
        const Schedule s(spec);
        for (const GridPoint& p : s.grid(0, 2 * s.t(), true)) {
            for (const GridPoint& q : g_terms(spec, p)) {
                // p appears among the transposes of q as often as q among the terms of p
                const auto back = g_transpose(spec, q);
                const auto terms = g_terms(spec, p);
                CHECK(std::count(back.begin(), back.end(), p) == std::count(terms.begin(), terms.end(), q));
            }
        }
    }
}

TEST_CASE("numeric seed mutation is an involution") {
    const Schedule s({Family::G2, 2, 3});
    for (auto mode : {CoefficientMode::trivial, CoefficientMode::tracked}) {
        const NumericSeed seed = random_seed(s.initial(), 5, mode);
        for (int k = 0; k < s.initial().size(); ++k) {
            const NumericSeed x = numeric_x_mutate(numeric_x_mutate(seed, k), k);
            const NumericSeed y = numeric_y_mutate(numeric_y_mutate(seed, k), k);
            for (int v = 0; v < s.initial().size(); ++v) {
                CHECK(rel(x.x[v], seed.x[v]) < 1e-12);
                CHECK(rel(y.y[v], seed.y[v]) < 1e-12);
            }
        }
    }
}

TEST_CASE("T- and Y-systems hold over positive reals, with periodicity") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::C, 3, 3}, FamilySpec{Family::F4, 4, 2},
                                  FamilySpec{Family::G2, 2, 2}, FamilySpec{Family::G2, 2, 4}}) {
        const Schedule s(spec);
        CAPTURE(spec.id());
        for (std::uint64_t seed = 1; seed <= 2; ++seed) {
            const NumericRun triv = run_numeric(s, seed, CoefficientMode::trivial);
            CHECK(check_T_residuals(triv, 1e-9).ok);
            CHECK(check_numeric_periodicity(triv, 1e-8).ok);
            const NumericRun tr = run_numeric(s, seed, CoefficientMode::tracked);
            CHECK(check_x_relations(tr, 1e-9).ok);
            CHECK(check_Y_residuals(tr, 1e-9).ok);
            CHECK(check_numeric_periodicity(tr, 1e-8).ok);
        }
    }
}

TEST_CASE("T full period and Y half period, pointwise") {
    const FamilySpec spec{Family::C, 3, 2};
    const Schedule s(spec);
    const NumericRun run = run_numeric(s, 3, CoefficientMode::tracked);
    const int half = s.half_period_n();
    long compared = 0;
    for (const auto& [p, v] : run.Y) {
        const GridPoint q{p.a, s.ta(p.a) * spec.level - p.m, p.n + half};
        auto it = run.Y.find(q);
        if (it == run.Y.end()) continue;
        CHECK(rel(it->second, v) < 1e-8);
        ++compared;
    }
    CHECK(compared > 0);
    const NumericRun triv = run_numeric(s, 3, CoefficientMode::trivial);
    compared = 0;
    for (const auto& [p, v] : triv.T) {
        auto it = triv.T.find({p.a, p.m, p.n + 2 * half});
        if (it == triv.T.end()) continue;
        CHECK(rel(it->second, v) < 1e-8);
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("trivial mode equals tracked mode with every coefficient frozen at the trivial semifield") {
    const Schedule s({Family::C, 2, 3});
    NumericSeed triv = random_seed(s.initial(), 9, CoefficientMode::trivial);
    const NumericSeed a = numeric_x_mutate(triv, 0);
    // in the trivial semifield y = 1 and 1 (+) 1 = 1: the exchange relation has no denominator
    double up = 1.0, down = 1.0;
    for (int i = 0; i < s.initial().size(); ++i) {
        const int b = s.initial()(i, 0);
        if (b > 0) up *= std::pow(triv.x[i], b);
        if (b < 0) down *= std::pow(triv.x[i], -b);
    }
    CHECK(rel(a.x[0], (up + down) / triv.x[0]) < 1e-14);
}

TEST_CASE("tropical shadow: numeric coefficients degenerate to the tropical exponents") {
    for (const FamilySpec spec : {FamilySpec{Family::C, 2, 2}, FamilySpec{Family::G2, 2, 2}}) {
        const Schedule s(spec);
        CHECK(check_tropical_shadow(run_tropical(s), 1, 1e-6).ok);
    }
}
