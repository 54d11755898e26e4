/**
 * \file dilog.hpp
 *
 * Rogers dilogarithm, the restricted constant Y-system and its unique
 * positive solution, and the constant and functional dilogarithm identities.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clab/check.hpp"
#include "clab/numeric.hpp"
#include "clab/tropical.hpp"

namespace clab {

class DilogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** L(x) = Li_2(x) + 1/2 log(x) log(1-x) on [0,1]; throws DilogError outside. */
double rogers_L(double x);
/** Direct tanh-sinh quadrature of the defining integral (reference value). */
double rogers_L_quadrature(double x);

/** Index (a, m) of a constant Y variable. */
using YIndex = std::pair<int, int>;

/**
 * One relation (Y_am)^2 = prod (1 + Y_bk)^e / prod (1 + 1/Y_a,m+-1); the
 * numerator exponents are accumulated from the time-dependent Y-system.
 */
struct ConstantRelation {
    YIndex lhs;
    std::map<YIndex, int> plus_factors;      ///< (1 + Y)^e
    std::vector<YIndex> inverse_factors;      ///< (1 + Y^-1) in the denominator
};

std::vector<ConstantRelation> constant_relations(const FamilySpec& spec);

struct ConstantYSolution {
    FamilySpec spec;
    std::map<YIndex, double> values;
    int iterations = 0;
    double max_residual = 0.0;  ///< relative residual of the squared relations
};

/** Relative residual of every relation at the given values (largest one). */
double constant_residual(const std::vector<ConstantRelation>& rels, const std::map<YIndex, double>& y);

/**
 * Damped fixed point Y <- (1-lambda) Y + lambda sqrt(RHS(Y)) from the given
 * start (Y = 1 when empty) until the relative update is below update_tol.
 * Throws DilogError after max_iter iterations.
 */
ConstantYSolution solve_constant_Y(const FamilySpec& spec, const std::map<YIndex, double>& start = {},
                                   double lambda = 0.5, double update_tol = 1e-13, int max_iter = 200000);

/** Random positive start, log-uniform in [1/spread, spread]. */
std::map<YIndex, double> random_constant_start(const FamilySpec& spec, std::uint64_t seed, double spread = 10.0);

/** r (l h - h^vee) / (h^vee + l). */
double central_charge(const FamilySpec& spec);
/** l dim g / (h^vee + l) - r. */
double central_charge_dim(const FamilySpec& spec);

/** (6/pi^2) sum L(Y/(1+Y)) against the central charge. */
CheckResult check_DI(const FamilySpec& spec, double tol = 1e-8);

/** Class sums (6/pi^2) sum L(Y/(1+Y)) and (6/pi^2) sum L(1/(1+Y)) over one parity class and a full period. */
struct FunctionalSums {
    double y_sum = 0.0;    ///< expected N_-
    double inv_sum = 0.0;  ///< expected N_+
    long points = 0;
};

FunctionalSums functional_sums(const NumericRun& run);

/**
 * Class sums equal (N_-, N_+) from the tropical counts and the doubled sums
 * equal the closed forms; also compares the constant of motion across the
 * given runs (all of the same case).
 */
CheckResult check_functional_DI(const std::vector<NumericRun>& runs, const SignCounts& counts, double tol = 1e-6);

/** Doubled right-hand sides (2 N_-, 2 N_+) in closed form. */
std::pair<long, long> functional_rhs(const FamilySpec& spec);

}  // namespace clab
