/**
 * \file properties.hpp
 *
 * Randomized and exhaustive property checks that cut across modules:
 * mutation as an involution, order independence of composite mutations,
 * the piecewise-linear reflections, the Rogers dilogarithm reflection,
 * uniqueness of the constant Y-system solution and level-rank duality.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clab/builders.hpp"
#include "clab/check.hpp"
#include "clab/tropical.hpp"

namespace clab {

/** Random quiver on n vertices with entries in [-max_mult, max_mult]. */
Quiver random_quiver(int n, std::uint64_t seed, int max_mult = 2, double density = 0.5);

/** mu_k mu_k = id, skew-symmetry kept, and mu_k(Q^op) = mu_k(Q)^op on random quivers. */
CheckResult check_mutation_involution(int trials, std::uint64_t seed);

/** Every composite mutation set of the schedule gives the same quiver under shuffled orders. */
CheckResult check_composite_order(const FamilySpec& spec, int shuffles, std::uint64_t seed);

/** sigma_i involutions on every root system used by the families (C up to max_rank). */
CheckResult check_all_sigma_involutions(int max_rank);

/**
 * L(x) + L(1-x) = pi^2/6 on the grid x = k/points, both for the library
 * evaluation and for the quadrature; also reports their largest difference.
 */
CheckResult check_rogers_reflection(int points, double tol = 1e-12);

/** The constant Y-system converges to the same point from the given random starts. */
CheckResult check_constant_Y_uniqueness(const FamilySpec& spec, int starts, double tol = 1e-10,
                                        std::uint64_t seed = 1);

/** Computed (N_+, N_-) keyed by (r, l) for type C. */
using LevelRankCounts = std::map<std::pair<int, int>, SignCounts>;

/** N_+(r, l) = N_-(l, r) over every pair whose counts are present both ways. */
CheckResult check_level_rank(const LevelRankCounts& counts);

/** N_+ + N_- against t (h^vee + l)((sum t_a) l - r), with no unit or mixed monomials. */
CheckResult check_point_count(const FamilySpec& spec, const SignCounts& counts);

}  // namespace clab
