/**
 * \file dilog.cpp
 *
 * Rogers dilogarithm, constant Y-system solver and dilogarithm identities.
 */
#include "clab/dilog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gsl/gsl_sf_dilog.h>

namespace clab {

namespace {

constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

void check_domain(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DilogError("Rogers dilogarithm needs 0 <= x <= 1, got " + std::to_string(x));
}

}  // namespace

double rogers_L(double x) {
    check_domain(x);
    if (x == 0.0) return 0.0;
    if (x == 1.0) return pi2_6;
    // the smaller argument keeps log(1-x) accurate
    if (x > 0.5) return pi2_6 - rogers_L(1.0 - x);
    return gsl_sf_dilog(x) + 0.5 * std::log(x) * std::log1p(-x);
}

double rogers_L_quadrature(double x) {
    check_domain(x);
    if (x == 0.0) return 0.0;
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [](double y) { return -0.5 * (std::log1p(-y) / y + std::log(y) / (1.0 - y)); };
    return integrator.integrate(f, 0.0, x, 1e-15);
}

std::vector<ConstantRelation> constant_relations(const FamilySpec& spec) {
    const CartanData cd = cartan_data(spec);
    std::vector<ConstantRelation> rels;
    for (int a = 1; a <= cd.rank(); ++a) {
        const int top = cd.ta(a) * spec.level - 1;
        for (int m = 1; m <= top; ++m) {
            ConstantRelation rel{{a, m}, {}, {}};
            for (const auto& q : g_transpose(spec, {a, m, 0})) ++rel.plus_factors[{q.a, q.m}];
            if (m > 1) rel.inverse_factors.push_back({a, m - 1});
            if (m < top) rel.inverse_factors.push_back({a, m + 1});
            rels.push_back(std::move(rel));
        }
    }
    return rels;
}

namespace {

double relation_rhs(const ConstantRelation& rel, const std::map<YIndex, double>& y) {
    double v = 1.0;
    for (const auto& [idx, e] : rel.plus_factors) v *= std::pow(1.0 + y.at(idx), e);
    for (const auto& idx : rel.inverse_factors) v /= 1.0 + 1.0 / y.at(idx);
    return v;
}

}  // namespace

double constant_residual(const std::vector<ConstantRelation>& rels, const std::map<YIndex, double>& y) {
    double worst = 0.0;
    for (const auto& rel : rels) {
        const double lhs = y.at(rel.lhs) * y.at(rel.lhs), rhs = relation_rhs(rel, y);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
    }
    return worst;
}

ConstantYSolution solve_constant_Y(const FamilySpec& spec, const std::map<YIndex, double>& start, double lambda,
                                   double update_tol, int max_iter) {
    const auto rels = constant_relations(spec);
    ConstantYSolution sol{spec, {}, 0, 0.0};
    for (const auto& rel : rels) {
        auto it = start.find(rel.lhs);
        sol.values[rel.lhs] = it == start.end() ? 1.0 : it->second;
    }
    for (sol.iterations = 1; sol.iterations <= max_iter; ++sol.iterations) {
        std::map<YIndex, double> next;
        double update = 0.0;
        for (const auto& rel : rels) {
            const double old = sol.values.at(rel.lhs);
            const double v = (1.0 - lambda) * old + lambda * std::sqrt(relation_rhs(rel, sol.values));
            update = std::max(update, std::abs(v - old) / v);
            next[rel.lhs] = v;
        }
        sol.values = std::move(next);
        if (update < update_tol) {
            sol.max_residual = constant_residual(rels, sol.values);
            return sol;
        }
    }
    throw DilogError("constant Y-system for " + spec.id() + " did not converge in " + std::to_string(max_iter) +
                     " iterations");
}

std::map<YIndex, double> random_constant_start(const FamilySpec& spec, std::uint64_t seed, double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logu(-std::log(spread), std::log(spread));
    std::map<YIndex, double> start;
    for (const auto& rel : constant_relations(spec)) start[rel.lhs] = std::exp(logu(rng));
    return start;
}

namespace {

int lie_dimension(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::C: return spec.rank * (2 * spec.rank + 1);
        case Family::F4: return 52;
        case Family::G2: return 14;
        default: break;
    }
    throw DilogError("dimension is defined for C, F4 and G2 only");
}

}  // namespace

double central_charge(const FamilySpec& spec) {
    const CartanData cd = cartan_data(spec);
    const double l = spec.level;
    return cd.rank() * (l * cd.h - cd.h_dual) / (cd.h_dual + l);
}

double central_charge_dim(const FamilySpec& spec) {
    const CartanData cd = cartan_data(spec);
    const double l = spec.level;
    return l * lie_dimension(spec) / (cd.h_dual + l) - cd.rank();
}

CheckResult check_DI(const FamilySpec& spec, double tol) {
    CheckResult res{"dilogarithm identity " + spec.id()};
    const ConstantYSolution sol = solve_constant_Y(spec);
    res.expect(sol.max_residual < 1e-12, [&] {
        return "constant Y residual " + std::to_string(sol.max_residual);
    });
    for (const auto& [idx, v] : sol.values)
        res.expect(v > 0.0, [&] { return "non-positive constant Y value"; });
    double lhs = 0.0;
    for (const auto& [idx, v] : sol.values) lhs += rogers_L(v / (1.0 + v));
    lhs /= pi2_6;
    const double rhs = central_charge(spec);
    res.expect(std::abs(lhs - rhs) < tol, [&] {
        return "LHS " + std::to_string(lhs) + " differs from " + std::to_string(rhs);
    });
    res.expect(std::abs(rhs - central_charge_dim(spec)) < 1e-12, [&] { return "the two central charge forms differ"; });
    res.metrics = {{"lhs", lhs},
                   {"rhs", rhs},
                   {"abs_error", std::abs(lhs - rhs)},
                   {"iterations", sol.iterations},
                   {"residual", sol.max_residual}};
    return res;
}

FunctionalSums functional_sums(const NumericRun& run) {
    const Schedule& s = run.schedule;
    const int period = 2 * s.half_period_n();
    if (run.n_lo > 0 || run.n_hi < period) throw DilogError("numeric run does not cover a full period");
    FunctionalSums sums;
    for (const auto& [p, y] : run.Y) {
        if (p.n < 0 || p.n >= period) continue;
        sums.y_sum += rogers_L(y / (1.0 + y));
        sums.inv_sum += rogers_L(1.0 / (1.0 + y));
        ++sums.points;
    }
    sums.y_sum /= pi2_6;
    sums.inv_sum /= pi2_6;
    return sums;
}

std::pair<long, long> functional_rhs(const FamilySpec& spec) {
    const long r = spec.rank, l = spec.level;
    switch (spec.family) {
        case Family::C: return {4 * r * (2 * r * l - r - 1), 4 * l * (2 * r * l - l - 1)};
        case Family::F4: return {48 * (4 * l - 3), 8 * l * (3 * l + 1)};
        case Family::G2: return {24 * (3 * l - 2), 12 * l * (2 * l + 1)};
        default: break;
    }
    throw DilogError("functional identities are defined for C, F4 and G2 only");
}

CheckResult check_functional_DI(const std::vector<NumericRun>& runs, const SignCounts& counts, double tol) {
    if (runs.empty()) throw DilogError("no numeric runs given");
    const FamilySpec& spec = runs.front().schedule.spec();
    CheckResult res{"functional dilogarithm identity " + spec.id()};
    const auto [rhs_minus, rhs_plus] = functional_rhs(spec);
    const long total = expected_point_count(spec);
    double lo_y = 1e300, hi_y = -1e300, lo_inv = 1e300, hi_inv = -1e300;
    nlohmann::json per_run = nlohmann::json::array();
    for (const auto& run : runs) {
        if (!(run.schedule.spec() == spec)) throw DilogError("runs of different cases");
        const FunctionalSums f = functional_sums(run);
        res.expect(f.points == total, [&] {
            return std::to_string(f.points) + " labeled points, expected " + std::to_string(total);
        });
        res.expect(std::abs(f.y_sum - counts.negative) < tol, [&] {
            return "sum L(Y/(1+Y)) = " + std::to_string(f.y_sum) + ", N_- = " + std::to_string(counts.negative);
        });
        res.expect(std::abs(f.inv_sum - counts.positive) < tol, [&] {
            return "sum L(1/(1+Y)) = " + std::to_string(f.inv_sum) + ", N_+ = " + std::to_string(counts.positive);
        });
        // the other parity class contributes the same sums
        res.expect(std::abs(2 * f.y_sum - rhs_minus) < 2 * tol, [&] {
            return "doubled sum " + std::to_string(2 * f.y_sum) + " differs from " + std::to_string(rhs_minus);
        });
        res.expect(std::abs(2 * f.inv_sum - rhs_plus) < 2 * tol, [&] {
            return "doubled sum " + std::to_string(2 * f.inv_sum) + " differs from " + std::to_string(rhs_plus);
        });
        lo_y = std::min(lo_y, f.y_sum), hi_y = std::max(hi_y, f.y_sum);
        lo_inv = std::min(lo_inv, f.inv_sum), hi_inv = std::max(hi_inv, f.inv_sum);
        per_run.push_back({{"y_sum", f.y_sum}, {"inv_sum", f.inv_sum}, {"points", f.points}});
    }
    res.expect(hi_y - lo_y < tol && hi_inv - lo_inv < tol, [&] {
        return "sums vary across initial data by " + std::to_string(std::max(hi_y - lo_y, hi_inv - lo_inv));
    });
    res.metrics = {{"runs", per_run},
                   {"N_minus", counts.negative},
                   {"N_plus", counts.positive},
                   {"doubled_rhs", {rhs_minus, rhs_plus}},
                   {"spread", std::max(hi_y - lo_y, hi_inv - lo_inv)}};
    return res;
}

}  // namespace clab
