/**
 * \file tropical.hpp
 *
 * Coefficient dynamics in the tropical semifield Trop(y): monomials are
 * integer exponent vectors over the initial coefficients, multiplication adds
 * exponents and y (+) 1 takes the componentwise minimum with zero.
 */
#pragma once

#include <string>
#include <vector>

#include "clab/check.hpp"
#include "clab/schedule.hpp"

namespace clab {

using TropMonomial = std::vector<int>;

enum class Sign { positive, negative, unit, mixed };

std::string to_string(Sign s);
Sign sign_of(const TropMonomial& m);

/** Unit vector e_i of length n. */
TropMonomial generator(int n, int i);
/** Inverse monomial (negated exponents). */
TropMonomial invert(const TropMonomial& m);
/** Zeroes the exponents of every killed generator. */
TropMonomial specialize(const TropMonomial& m, const std::vector<int>& kill);

struct TropSeed {
    Quiver Q;
    std::vector<TropMonomial> y;

    static TropSeed initial(const Quiver& q);
    void mutate_at(int k);
};

/** y'_k = y_k^-1, y'_j = y_j y_k^[B_kj]+ (1 (+) y_k)^-B_kj, with B mutated alongside. */
TropSeed trop_y_mutate(const TropSeed& seed, int k);

/** Full coefficient tuples y(u) for n in [n_lo, n_hi]. */
class TropicalRun {
public:
    TropicalRun(Schedule s, int n_lo, int n_hi);

    const Schedule& schedule() const { return s_; }
    int n_lo() const { return n_lo_; }
    int n_hi() const { return n_hi_; }
    bool has(int n) const { return n >= n_lo_ && n <= n_hi_; }
    const std::vector<TropMonomial>& tuple(int n) const;
    const TropMonomial& y(int v, int n) const { return tuple(n).at(v); }

private:
    Schedule s_;
    int n_lo_, n_hi_;
    std::vector<std::vector<TropMonomial>> tuples_;
};

/** Default window: -h^vee <= u <= 3(h^vee + l). */
TropicalRun run_tropical(const Schedule& s);
TropicalRun run_tropical(const Schedule& s, int n_lo, int n_hi);

struct SignCounts {
    long positive = 0;
    long negative = 0;
    long unit = 0;
    long mixed = 0;
};

/** Signs of the monomials at the p_+ points with 0 <= u < 2(h^vee + l). */
SignCounts count_signs(const TropicalRun& run);

/** Closed forms (N_+, N_-) for the family. */
std::pair<long, long> expected_sign_counts(const FamilySpec& spec);
/** Number of p_+ points per full period: t (h^vee + l) ((sum t_a) l - r). */
long expected_point_count(const FamilySpec& spec);

/** Half periodicity with omega and full periodicity, on the whole tuple. */
CheckResult check_tropical_periodicity(const TropicalRun& run);
/** Sign classification on 0 <= u < l and -h^vee <= u < 0. */
CheckResult check_sign_pattern(const TropicalRun& run);
/** The tuples y(l) and y(-h^vee). */
CheckResult check_boundary_tuples(const TropicalRun& run);

/** Exponent vectors of a tropical run as JSON, one entry per p_+ point. */
nlohmann::json tropical_report(const TropicalRun& run);

}  // namespace clab
