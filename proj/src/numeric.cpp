/**
 * \file numeric.cpp
 *
 * Positive-real cluster runs and residual certification.
 */
#include "clab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace clab {

namespace {

int m_max(const CartanData& cd, int level, int a) { return cd.ta(a) * level - 1; }

}  // namespace

std::vector<GridPoint> g_terms(const FamilySpec& spec, const GridPoint& p) {
    const CartanData cd = cartan_data(spec);
    const int r = cd.rank(), l = spec.level;
    const int a = p.a, m = p.m, n = p.n;
    std::vector<GridPoint> out;
    auto add = [&](int b, int k, int v) {
        if (b < 1 || b > r) return;                  // T^(0) = 1
        if (k < 1 || k > m_max(cd, l, b)) return;    // T_0 = T_{t_b l} = 1
        out.push_back({b, k, v});
    };
    switch (spec.family) {
        case Family::C:
            if (a <= r - 2) {
                add(a - 1, m, n);
                add(a + 1, m, n);
            } else if (a == r - 1) {
                add(r - 2, m, n);
                if (m % 2 == 0) {
                    add(r, m / 2, n - 1);
                    add(r, m / 2, n + 1);
                } else {
                    add(r, (m - 1) / 2, n);
                    add(r, (m + 1) / 2, n);
                }
            } else {
                add(r - 1, 2 * m, n);
            }
            break;
        case Family::F4:
            switch (a) {
                case 1: add(2, m, n); break;
                case 2:
                    add(1, m, n);
                    add(3, 2 * m, n);
                    break;
                case 3:
                    if (m % 2 == 0) {
                        add(2, m / 2, n - 1);
                        add(2, m / 2, n + 1);
                    } else {
                        add(2, (m - 1) / 2, n);
                        add(2, (m + 1) / 2, n);
                    }
                    add(4, m, n);
                    break;
                default: add(3, m, n); break;
            }
            break;
        case Family::G2:
            if (a == 1) {
                add(2, 3 * m, n);
            } else {
                const int j = m / 3;
                switch (m % 3) {
                    case 0:
                        add(1, j, n - 2);
                        add(1, j, n);
                        add(1, j, n + 2);
                        break;
                    case 1:
                        add(1, j, n - 1);
                        add(1, j, n + 1);
                        add(1, j + 1, n);
                        break;
                    default:
                        add(1, j, n);
                        add(1, j + 1, n - 1);
                        add(1, j + 1, n + 1);
                        break;
                }
            }
            break;
        default:
            throw std::invalid_argument("T-systems are defined for C, F4 and G2 only");
    }
    return out;
}

std::vector<GridPoint> g_transpose(const FamilySpec& spec, const GridPoint& p) {
    const CartanData cd = cartan_data(spec);
    std::vector<GridPoint> out;
    // every factor of g_terms(q) lies within 2 time steps of q
    for (int b = 1; b <= cd.rank(); ++b)
        for (int k = 1; k <= m_max(cd, spec.level, b); ++k)
            for (int v = p.n - 2; v <= p.n + 2; ++v) {
                GridPoint q{b, k, v};
                for (const auto& f : g_terms(spec, q))
                    if (f == p) out.push_back(q);
            }
    return out;
}

void NumericSeed::mutate_at(int k) {
    const int n = Q.size();
    double plus = 1.0, minus = 1.0;
    for (int i = 0; i < n; ++i) {
        const int b = Q(i, k);
        if (b > 0) plus *= std::pow(x[i], b);
        if (b < 0) minus *= std::pow(x[i], -b);
    }
    if (mode == CoefficientMode::trivial) {
        x[k] = (plus + minus) / x[k];
    } else {
        const double yk = y[k];
        x[k] = (yk * plus + minus) / ((1.0 + yk) * x[k]);
        for (int j = 0; j < n; ++j) {
            const int b = Q(k, j);
            if (j == k || b == 0) continue;
            y[j] *= std::pow(yk, std::max(b, 0)) * std::pow(1.0 + yk, -b);
        }
        y[k] = 1.0 / yk;
    }
    if (!(x[k] > 0.0) || !std::isfinite(x[k])) throw std::runtime_error("cluster variable left (0, inf)");
    mutate_in_place(Q, k);
}

NumericSeed numeric_x_mutate(const NumericSeed& s, int k) {
    NumericSeed r = s;
    r.mutate_at(k);
    return r;
}

NumericSeed numeric_y_mutate(const NumericSeed& s, int k) {
    // the coefficient part of a seed mutation; x is carried along
    NumericSeed r = s;
    r.mutate_at(k);
    return r;
}

NumericSeed random_seed(const Quiver& q, std::uint64_t rng_seed, CoefficientMode mode, double lo, double hi) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    NumericSeed s{q, std::vector<double>(q.size()), std::vector<double>(q.size(), 1.0), mode};
    for (auto& v : s.x) v = dist(rng);
    if (mode == CoefficientMode::tracked)
        for (auto& v : s.y) v = dist(rng);
    return s;
}

NumericRun run_numeric(const Schedule& s, const NumericSeed& init, int n_lo, int n_hi) {
    NumericRun run{s, init.mode, n_lo, n_hi, {}, {}, {}};
    run_schedule(s, init, n_lo, n_hi, [&](int n, const NumericSeed& seed) {
        for (int v : s.mutation_set(n)) {
            const GridPoint p = s.mutation_point_label(v, n);
            const int step = s.t() / s.ta(p.a);
            run.T[{p.a, p.m, n - step}] = seed.x[v];
            run.Y[p] = seed.y[v];
            run.points.emplace_back(v, n);
        }
    });
    return run;
}

NumericRun run_numeric(const Schedule& s, std::uint64_t rng_seed, CoefficientMode mode) {
    const int half = s.half_period_n();
    return run_numeric(s, random_seed(s.initial(), rng_seed, mode), 0, 4 * half + 2 * s.t());
}

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

const double* lookup(const std::map<GridPoint, double>& m, const GridPoint& p) {
    auto it = m.find(p);
    return it == m.end() ? nullptr : &it->second;
}

// T value with the unit boundary condition; false if outside the run.
bool t_value(const NumericRun& run, const GridPoint& p, double& out) {
    const CartanData& cd = run.schedule.cartan();
    if (p.m == 0 || p.m == m_max(cd, run.schedule.spec().level, p.a) + 1) {
        out = 1.0;
        return true;
    }
    const double* v = lookup(run.T, p);
    if (!v) return false;
    out = *v;
    return true;
}

// Values entering the T relation centred at p: T(u -+ 1/t_a), T_{m-+1}(u) and
// the product of the second-term factors. False if any is outside the run.
struct TTerms {
    double lo, hi, dn, up, g;
};

bool t_terms(const NumericRun& run, const GridPoint& p, TTerms& out) {
    const Schedule& s = run.schedule;
    const int step = s.t() / s.ta(p.a);
    if (!t_value(run, {p.a, p.m, p.n - step}, out.lo) || !t_value(run, {p.a, p.m, p.n + step}, out.hi) ||
        !t_value(run, {p.a, p.m - 1, p.n}, out.dn) || !t_value(run, {p.a, p.m + 1, p.n}, out.up))
        return false;
    out.g = 1.0;
    for (const auto& f : g_terms(s.spec(), p)) {
        double v;
        if (!t_value(run, f, v)) return false;
        out.g *= v;
    }
    return true;
}

}  // namespace

CheckResult check_T_residuals(const NumericRun& run, double tol) {
    const Schedule& s = run.schedule;
    CheckResult r("T-system residuals");
    r.metrics["tol"] = tol;
    double worst = 0.0;
    for (const GridPoint& p : s.grid(run.n_lo, run.n_hi, true)) {
        TTerms t;
        if (!t_terms(run, p, t)) continue;
        const double err = rel_err(t.lo * t.hi, t.dn * t.up + t.g);
        worst = std::max(worst, err);
        r.expect(err < tol, [&] {
            return "T relation at " + to_string(p, s.t()) + " residual " + std::to_string(err);
        });
    }
    r.metrics["max_residual"] = worst;
    return r;
}

CheckResult check_x_relations(const NumericRun& run, double tol) {
    const Schedule& s = run.schedule;
    CheckResult r("exchange relations with coefficients");
    r.metrics["tol"] = tol;
    double worst = 0.0;
    for (const GridPoint& p : s.grid(run.n_lo, run.n_hi, true)) {
        TTerms t;
        const double* y = lookup(run.Y, p);
        if (!y || !t_terms(run, p, t)) continue;
        const double err = rel_err(t.lo * t.hi, (*y * t.g + t.dn * t.up) / (1.0 + *y));
        worst = std::max(worst, err);
        r.expect(err < tol, [&] {
            return "exchange relation at " + to_string(p, s.t()) + " residual " + std::to_string(err);
        });
    }
    r.metrics["max_residual"] = worst;
    return r;
}

CheckResult check_Y_residuals(const NumericRun& run, double tol) {
    const Schedule& s = run.schedule;
    const int l = s.spec().level;
    CheckResult r("Y-system residuals");
    r.metrics["tol"] = tol;
    double worst = 0.0;
    for (const GridPoint& p : s.grid(run.n_lo, run.n_hi, false)) {
        const int step = s.t() / s.ta(p.a);
        const double* lo = lookup(run.Y, {p.a, p.m, p.n - step});
        const double* hi = lookup(run.Y, {p.a, p.m, p.n + step});
        if (!lo || !hi) continue;
        double rhs = 1.0;
        bool ok = true;
        for (int dm : {-1, 1}) {
            const int k = p.m + dm;
            if (k == 0 || k == s.ta(p.a) * l) continue;  // Y_0^-1 = Y_{t_a l}^-1 = 0
            const double* v = lookup(run.Y, {p.a, k, p.n});
            if (!v) {
                ok = false;
                break;
            }
            rhs /= 1.0 + 1.0 / *v;
        }
        for (const auto& q : g_transpose(s.spec(), p)) {
            const double* v = lookup(run.Y, q);
            if (!v) {
                ok = false;
                break;
            }
            rhs *= 1.0 + *v;
        }
        if (!ok) continue;
        const double err = rel_err(*lo * *hi, rhs);
        worst = std::max(worst, err);
        r.expect(err < tol, [&] {
            return "Y relation at " + to_string(p, s.t()) + " residual " + std::to_string(err);
        });
    }
    r.metrics["max_residual"] = worst;
    return r;
}

CheckResult check_numeric_periodicity(const NumericRun& run, double tol) {
    const Schedule& s = run.schedule;
    const int half = s.half_period_n(), l = s.spec().level;
    CheckResult r("numeric periodicity");
    r.metrics["tol"] = tol;
    double worst = 0.0;
    auto compare = [&](const std::map<GridPoint, double>& values, const std::string& what) {
        for (const auto& [p, v] : values) {
            const GridPoint flip{p.a, s.ta(p.a) * l - p.m, p.n + half};
            const GridPoint full{p.a, p.m, p.n + 2 * half};
            if (const double* w = lookup(values, flip)) {
                const double e = rel_err(v, *w);
                worst = std::max(worst, e);
                r.expect(e < tol, [&] { return what + " half period fails at " + to_string(p, s.t()); });
            }
            if (const double* w = lookup(values, full)) {
                const double e = rel_err(v, *w);
                worst = std::max(worst, e);
                r.expect(e < tol, [&] { return what + " full period fails at " + to_string(p, s.t()); });
            }
        }
    };
    compare(run.T, "T");
    if (run.mode == CoefficientMode::tracked) compare(run.Y, "Y");
    r.metrics["max_error"] = worst;
    return r;
}

namespace {

// log y-dynamics: ly'_j = ly_j + [b]+ ly_k - b log(1 + e^{ly_k})
struct LogSeed {
    Quiver Q;
    std::vector<double> ly;

    void mutate_at(int k) {
        const double lk = ly[k];
        const double soft = lk > 0 ? lk + std::log1p(std::exp(-lk)) : std::log1p(std::exp(lk));
        for (int j = 0; j < Q.size(); ++j) {
            const int b = Q(k, j);
            if (j == k || b == 0) continue;
            ly[j] += std::max(b, 0) * lk - b * soft;
        }
        ly[k] = -lk;
        mutate_in_place(Q, k);
    }
};

}  // namespace

CheckResult check_tropical_shadow(const TropicalRun& trop, std::uint64_t rng_seed, double tol) {
    const Schedule& s = trop.schedule();
    const int nv = s.initial().size();
    const int n_lo = std::max(trop.n_lo(), -s.t() * s.cartan().h_dual);
    const int n_hi = std::min(trop.n_hi(), 2 * s.half_period_n());
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> pick(1, 2);
    std::vector<double> d(nv);
    for (auto& v : d) v = pick(rng);

    // slope of log y in log eps for the direction dir, at every mutation point
    const double l1 = std::log(1e-20), l2 = std::log(1e-40);
    auto slopes = [&](const std::vector<double>& dir) {
        std::map<std::pair<int, int>, double> out;
        std::map<std::pair<int, int>, double> first;
        for (double le : {l1, l2}) {
            LogSeed seed{s.initial(), {}};
            for (double e : dir) seed.ly.push_back(e * le);
            run_schedule(s, seed, n_lo, n_hi, [&](int n, const LogSeed& st) {
                for (int v : s.mutation_set(n)) {
                    if (le == l1) first[{v, n}] = st.ly[v];
                    else out[{v, n}] = (first[{v, n}] - st.ly[v]) / (l1 - l2);
                }
            });
        }
        return out;
    };
    const auto base = slopes(d);
    std::vector<std::map<std::pair<int, int>, double>> shifted;
    for (int i = 0; i < nv; ++i) {
        auto di = d;
        di[i] += 1.0;
        shifted.push_back(slopes(di));
    }
    CheckResult r("tropical shadow");
    double worst = 0.0;
    for (const auto& [key, sl] : base) {
        const auto [v, n] = key;
        const TropMonomial& e = trop.y(v, n);
        double dot = 0.0;
        for (int i = 0; i < nv; ++i) dot += e[i] * d[i];
        double err = std::abs(sl - dot);
        for (int i = 0; i < nv; ++i) err = std::max(err, std::abs(shifted[i].at(key) - sl - e[i]));
        worst = std::max(worst, err);
        r.expect(err < tol, [&] {
            return "log-slope at vertex " + std::to_string(v) + ", u=" + format_time(n, s.t()) +
                   " differs from the tropical exponents by " + std::to_string(err);
        });
    }
    r.metrics["max_error"] = worst;
    return r;
}

}  // namespace clab
