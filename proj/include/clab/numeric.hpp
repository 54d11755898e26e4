/**
 * \file numeric.hpp
 *
 * Cluster and coefficient dynamics over positive reals along the schedule,
 * labeled by grid points, with T-/Y-system residual and periodicity checks.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clab/check.hpp"
#include "clab/schedule.hpp"
#include "clab/tropical.hpp"

namespace clab {

/**
 * Factors of the second term of the T-system relation centred at p, i.e. the
 * points (b,k,v) with G(b,k,v;a,m,u) > 0, repeated by multiplicity. Boundary
 * factors (T^(0), T_0, T_{t_a l}) are omitted.
 */
std::vector<GridPoint> g_terms(const FamilySpec& spec, const GridPoint& p);

/**
 * Transpose: the relation centres q with p among g_terms(q), repeated by
 * multiplicity. These give the (1+Y) factors of the Y-system relation at p.
 */
std::vector<GridPoint> g_transpose(const FamilySpec& spec, const GridPoint& p);

enum class CoefficientMode { trivial, tracked };

struct NumericSeed {
    Quiver Q;
    std::vector<double> x;
    std::vector<double> y;
    CoefficientMode mode = CoefficientMode::tracked;

    void mutate_at(int k);
};

/** Exchange relation x'_k x_k = (y_k prod x^[B_ik]+ + prod x^[-B_ik]+) / (1 + y_k); y = 1, 1 (+) 1 = 1 in trivial mode. */
NumericSeed numeric_x_mutate(const NumericSeed& s, int k);
/** y'_k = 1/y_k, y'_j = y_j y_k^[B_kj]+ (1 + y_k)^-B_kj. */
NumericSeed numeric_y_mutate(const NumericSeed& s, int k);

/** Random positive initial data, uniform in [lo, hi]. */
NumericSeed random_seed(const Quiver& q, std::uint64_t rng_seed, CoefficientMode mode, double lo = 0.5,
                        double hi = 2.0);

/** Labeled values T^(a)_m(u) (on P_+) and Y^(a)_m(u) (on P'_+). */
struct NumericRun {
    Schedule schedule;
    CoefficientMode mode = CoefficientMode::tracked;
    int n_lo = 0, n_hi = 0;
    std::map<GridPoint, double> T;
    std::map<GridPoint, double> Y;
    /** Mutation points (vertex, n) visited, in time order. */
    std::vector<std::pair<int, int>> points;
};

/** Runs over [n_lo, n_hi); default window covers two full periods. */
NumericRun run_numeric(const Schedule& s, std::uint64_t rng_seed, CoefficientMode mode);
NumericRun run_numeric(const Schedule& s, const NumericSeed& init, int n_lo, int n_hi);

/** T-system relations at every P'_+ point whose values are available (trivial mode). */
CheckResult check_T_residuals(const NumericRun& run, double tol = 1e-9);
/** Exchange relation with coefficients, x(u-1/t_a) x(u+1/t_a) = (y G + x_{m-1} x_{m+1})/(1+y) (tracked mode). */
CheckResult check_x_relations(const NumericRun& run, double tol = 1e-9);
/** Y-system relations at every P_+ point whose values are available. */
CheckResult check_Y_residuals(const NumericRun& run, double tol = 1e-9);
/** Half periodicity (m -> t_a l - m) and full periodicity of T and Y. */
CheckResult check_numeric_periodicity(const NumericRun& run, double tol = 1e-8);

/**
 * Tropical shadow: with y_i = eps^(d_i) the log-slopes of the numeric y at
 * every mutation point equal the tropical exponent vector (recovered from
 * n+1 directions). Computed in the log domain.
 */
CheckResult check_tropical_shadow(const TropicalRun& trop, std::uint64_t rng_seed, double tol = 1e-6);

}  // namespace clab
