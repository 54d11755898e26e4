/**
 * \file properties.cpp
 *
 * Cross-module property checks.
 */
#include "clab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "clab/dilog.hpp"
#include "clab/roots.hpp"
#include "clab/schedule.hpp"

namespace clab {

Quiver random_quiver(int n, std::uint64_t seed, int max_mult, double density) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution present(density);
    std::uniform_int_distribution<int> mult(1, std::max(1, max_mult));
    std::bernoulli_distribution forward(0.5);
    Quiver q(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (present(rng)) q.set(i, j, forward(rng) ? mult(rng) : -mult(rng));
    return q;
}

CheckResult check_mutation_involution(int trials, std::uint64_t seed) {
    CheckResult res{"mutation involution"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(2, 12);
    for (int t = 0; t < trials; ++t) {
        const int n = size(rng);
        const Quiver q = random_quiver(n, rng(), 2, 0.5);
        const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const Quiver once = mutate(q, k);
        res.expect(once.is_skew(), [&] { return "mutation broke skew-symmetry (trial " + std::to_string(t) + ")"; });
        res.expect(mutate(once, k).same_matrix(q),
                   [&] { return "mutating twice at " + std::to_string(k) + " is not the identity (trial " +
                                std::to_string(t) + ")"; });
        res.expect(mutate(opposite(q), k).same_matrix(opposite(once)),
                   [&] { return "mutation does not commute with the opposite (trial " + std::to_string(t) + ")"; });
    }
    res.metrics["trials"] = trials;
    return res;
}

CheckResult check_composite_order(const FamilySpec& spec, int shuffles, std::uint64_t seed) {
    const Schedule s(spec);
    CheckResult res{"composite mutation order " + spec.id()};
    std::mt19937_64 rng(seed);
    Quiver q = s.initial();
    for (int n = 0; n < s.cycle(); ++n) {
        const Quiver reference = composite_mutate(q, s.mutation_set(n));
        std::vector<int> order = s.mutation_set(n);
        for (int k = 0; k < shuffles; ++k) {
            std::shuffle(order.begin(), order.end(), rng);
            res.expect(composite_mutate(q, order).same_matrix(reference), [&] {
                return "mutation order changes the result at u=" + format_time(n, s.t());
            });
        }
        q = reference;
    }
    return res;
}

CheckResult check_all_sigma_involutions(int max_rank) {
    CheckResult res{"sigma involutions"};
    long systems = 0;
    auto add = [&](const RootSystem& rs) {
        res.merge(check_sigma_involutions(rs));
        ++systems;
    };
    for (int r = 2; r <= max_rank; ++r) {
        add(RootSystem::make('D', r + 1));
        add(RootSystem::make('A', 2 * r + 1));
        add(RootSystem::make('A', r - 1));
    }
    add(RootSystem::make('E', 6));
    add(d4_central());
    res.metrics["systems"] = systems;
    return res;
}

CheckResult check_rogers_reflection(int points, double tol) {
    CheckResult res{"Rogers dilogarithm reflection"};
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    double worst = 0.0, worst_quad = 0.0, worst_diff = 0.0;
    for (int k = 0; k <= points; ++k) {
        const double x = static_cast<double>(k) / points;
        const double err = std::abs(rogers_L(x) + rogers_L(1.0 - x) - pi2_6);
        const double err_quad = std::abs(rogers_L_quadrature(x) + rogers_L_quadrature(1.0 - x) - pi2_6);
        worst = std::max(worst, err);
        worst_quad = std::max(worst_quad, err_quad);
        worst_diff = std::max(worst_diff, std::abs(rogers_L(x) - rogers_L_quadrature(x)));
        res.expect(err < tol && err_quad < tol, [&] {
            return "L(x) + L(1-x) is off by " + std::to_string(std::max(err, err_quad)) + " at x=" + std::to_string(x);
        });
    }
    res.expect(worst_diff < tol, [&] { return "library and quadrature differ by " + std::to_string(worst_diff); });
    res.metrics["max_error"] = worst;
    res.metrics["max_error_quadrature"] = worst_quad;
    res.metrics["max_library_vs_quadrature"] = worst_diff;
    return res;
}

CheckResult check_constant_Y_uniqueness(const FamilySpec& spec, int starts, double tol, std::uint64_t seed) {
    CheckResult res{"constant Y uniqueness " + spec.id()};
    std::vector<ConstantYSolution> sols;
    for (int k = 0; k < starts; ++k) sols.push_back(solve_constant_Y(spec, random_constant_start(spec, seed + k)));
    double worst = 0.0;
    for (size_t a = 0; a < sols.size(); ++a)
        for (size_t b = a + 1; b < sols.size(); ++b) {
            double d = 0.0;
            for (const auto& [idx, v] : sols[a].values) {
                const double w = sols[b].values.at(idx);
                d = std::max(d, std::abs(v - w) / std::max(v, w));
            }
            worst = std::max(worst, d);
            res.expect(d < tol, [&] {
                return "starts " + std::to_string(a) + " and " + std::to_string(b) + " converge to points " +
                       std::to_string(d) + " apart";
            });
        }
    for (const auto& s : sols) {
        bool positive = true;
        for (const auto& [idx, v] : s.values) positive = positive && v > 0.0;
        res.expect(positive, [] { return "a solution has a non-positive entry"; });
    }
    res.metrics["starts"] = starts;
    res.metrics["max_pairwise_distance"] = worst;
    return res;
}

CheckResult check_level_rank(const LevelRankCounts& counts) {
    CheckResult res{"level-rank duality"};
    long pairs = 0;
    for (const auto& [key, c] : counts) {
        const auto [r, l] = key;
        auto dual = counts.find({l, r});
        if (dual == counts.end()) continue;
        ++pairs;
        res.expect(c.positive == dual->second.negative, [&, r = r, l = l] {
            return "N+(" + std::to_string(r) + "," + std::to_string(l) + ") = " + std::to_string(c.positive) +
                   " but N-(" + std::to_string(l) + "," + std::to_string(r) + ") = " +
                   std::to_string(dual->second.negative);
        });
    }
    res.metrics["pairs"] = pairs;
    return res;
}

CheckResult check_point_count(const FamilySpec& spec, const SignCounts& counts) {
    CheckResult res{"point count " + spec.id()};
    const long expected = expected_point_count(spec);
    res.expect(counts.positive + counts.negative == expected, [&] {
        return "N+ + N- = " + std::to_string(counts.positive + counts.negative) + ", expected " +
               std::to_string(expected);
    });
    res.expect(counts.unit == 0 && counts.mixed == 0, [&] {
        return std::to_string(counts.unit) + " unit and " + std::to_string(counts.mixed) + " mixed monomials";
    });
    res.metrics["points"] = counts.positive + counts.negative + counts.unit + counts.mixed;
    res.metrics["expected"] = expected;
    return res;
}

}  // namespace clab
