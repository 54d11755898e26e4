/**
 * \file tropical.cpp
 *
 * Tropical coefficient runs and the sign, periodicity and boundary checks.
 */
#include "clab/tropical.hpp"

#include <algorithm>
#include <set>

namespace clab {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::positive: return "positive";
        case Sign::negative: return "negative";
        case Sign::unit: return "unit";
        case Sign::mixed: return "mixed";
    }
    return "?";
}

Sign sign_of(const TropMonomial& m) {
    bool pos = false, neg = false;
    for (int e : m) {
        if (e > 0) pos = true;
        if (e < 0) neg = true;
    }
    if (pos && neg) return Sign::mixed;
    if (pos) return Sign::positive;
    if (neg) return Sign::negative;
    return Sign::unit;
}

TropMonomial generator(int n, int i) {
    TropMonomial m(n, 0);
    m.at(i) = 1;
    return m;
}

TropMonomial invert(const TropMonomial& m) {
    TropMonomial r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = -m[i];
    return r;
}

TropMonomial specialize(const TropMonomial& m, const std::vector<int>& kill) {
    TropMonomial r = m;
    for (int v : kill) r.at(v) = 0;
    return r;
}

TropSeed TropSeed::initial(const Quiver& q) {
    TropSeed s{q, {}};
    for (int i = 0; i < q.size(); ++i) s.y.push_back(generator(q.size(), i));
    return s;
}

void TropSeed::mutate_at(int k) {
    const int n = Q.size();
    const TropMonomial yk = y[k];
    for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const int b = Q(k, j);
        if (b == 0) continue;
        auto& yj = y[j];
        for (int c = 0; c < n; ++c) yj[c] += std::max(b, 0) * yk[c] - b * std::min(yk[c], 0);
    }
    for (int& e : y[k]) e = -e;
    mutate_in_place(Q, k);
}

TropSeed trop_y_mutate(const TropSeed& seed, int k) {
    TropSeed r = seed;
    r.mutate_at(k);
    return r;
}

TropicalRun::TropicalRun(Schedule s, int n_lo, int n_hi) : s_(std::move(s)), n_lo_(n_lo), n_hi_(n_hi) {
    tuples_.resize(n_hi - n_lo + 1);
    // run_schedule visits [n_lo, n_hi); the final tuple is recorded after the last step
    run_schedule(s_, TropSeed::initial(s_.initial()), n_lo, n_hi + 1,
                 [&](int n, const TropSeed& seed) { tuples_[n - n_lo_] = seed.y; });
}

const std::vector<TropMonomial>& TropicalRun::tuple(int n) const {
    if (!has(n)) throw ScheduleError("time u=" + format_time(n, s_.t()) + " outside the tropical run");
    return tuples_[n - n_lo_];
}

TropicalRun run_tropical(const Schedule& s) {
    return TropicalRun(s, -s.t() * s.cartan().h_dual, 3 * s.half_period_n());
}

TropicalRun run_tropical(const Schedule& s, int n_lo, int n_hi) { return TropicalRun(s, n_lo, n_hi); }

SignCounts count_signs(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    SignCounts c;
    for (int n = 0; n < 2 * s.half_period_n(); ++n)
        for (int v : s.mutation_set(n)) {
            switch (sign_of(run.y(v, n))) {
                case Sign::positive: ++c.positive; break;
                case Sign::negative: ++c.negative; break;
                case Sign::unit: ++c.unit; break;
                case Sign::mixed: ++c.mixed; break;
            }
        }
    return c;
}

std::pair<long, long> expected_sign_counts(const FamilySpec& spec) {
    const long r = spec.rank, l = spec.level;
    switch (spec.family) {
        case Family::C: return {2 * l * (2 * r * l - l - 1), 2 * r * (2 * l * r - r - 1)};
        case Family::F4: return {4 * l * (3 * l + 1), 24 * (4 * l - 3)};
        case Family::G2: return {6 * l * (2 * l + 1), 12 * (3 * l - 2)};
        default: break;
    }
    throw std::invalid_argument("sign counts are defined for C, F4 and G2 only");
}

long expected_point_count(const FamilySpec& spec) {
    const CartanData cd = cartan_data(spec);
    return static_cast<long>(cd.t) * (cd.h_dual + spec.level) * (cd.sum_ta() * spec.level - cd.rank());
}

CheckResult check_tropical_periodicity(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    CheckResult res{"tropical periodicity"};
    const VertexPermutation& omega = s.involutions().omega;
    const int half = s.half_period_n();
    const int nv = s.initial().size();
    for (int n = run.n_lo(); n + half <= run.n_hi(); ++n)
        for (int v = 0; v < nv; ++v)
            res.expect(run.y(v, n + half) == run.y(omega[v], n), [&] {
                return "half period fails at vertex " + std::to_string(v) + ", u=" + format_time(n, s.t());
            });
    for (int n = run.n_lo(); n + 2 * half <= run.n_hi(); ++n)
        for (int v = 0; v < nv; ++v)
            res.expect(run.y(v, n + 2 * half) == run.y(v, n), [&] {
                return "full period fails at vertex " + std::to_string(v) + ", u=" + format_time(n, s.t());
            });
    return res;
}

namespace {

// Rows whose sign in the region -h^vee <= u < 0 depends on u; all other
// mutation points there are negative.
bool exceptional_row(const FamilySpec& spec, const VertexMeta& m) {
    if (m.fill == Fill::circle) return false;
    switch (spec.family) {
        case Family::C:
        case Family::F4: return m.row % 2 == 1;
        case Family::G2: return m.row % 3 != 0;
        default: return false;
    }
}

std::set<int> exceptional_positive_times(const Schedule& s) {
    switch (s.spec().family) {
        case Family::C: {
            const int hd = s.cartan().h_dual;  // u = -h^vee/2, -h^vee/2 - 1/2
            return {-hd, -hd - 1};
        }
        case Family::F4: return {-4, -5, -9, -10, -14, -15};
        case Family::G2: return {-3, -4, -5, -8, -9, -10};
        default: return {};
    }
}

}  // namespace

CheckResult check_sign_pattern(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    const FamilySpec& spec = s.spec();
    CheckResult res{"sign pattern"};
    const int t = s.t();
    for (int n = 0; n < t * spec.level; ++n)
        for (int v : s.mutation_set(n))
            res.expect(sign_of(run.y(v, n)) == Sign::positive, [&] {
                return "vertex " + std::to_string(v) + " at u=" + format_time(n, t) + " is not positive";
            });
    const std::set<int> special = exceptional_positive_times(s);
    std::set<int> exceptional_times;
    for (int n = -t * s.cartan().h_dual; n < 0; ++n)
        for (int v : s.mutation_set(n)) {
            const VertexMeta& m = s.initial().meta()[v];
            const bool exc = exceptional_row(spec, m);
            if (exc) exceptional_times.insert(n);
            const Sign want = exc && special.count(n) ? Sign::positive : Sign::negative;
            const Sign got = sign_of(run.y(v, n));
            res.expect(got == want, [&] {
                return "vertex (" + std::to_string(m.col) + "," + std::to_string(m.row) + ") at u=" +
                       format_time(n, t) + " is " + to_string(got) + ", expected " + to_string(want);
            });
        }
    // For F4 and G2 the listed times are exactly the mutation times of the
    // exceptional rows; for C the statement only constrains times that occur
    // (u = -h^vee/2 is not a mutation time of an odd row when r = 2).
    if (spec.family != Family::C)
        for (int n = -t * s.cartan().h_dual; n < 0; ++n)
            res.expect(exceptional_times.count(n) > 0, [&] {
                return "no exceptional-row mutation point at u=" + format_time(n, t);
            });
    for (int n : special)
        if (spec.family != Family::C)
        res.expect(exceptional_times.count(n) > 0, [&] {
            return "no exceptional-row mutation point at u=" + format_time(n, t);
        });
    return res;
}

CheckResult check_boundary_tuples(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    const FamilySpec& spec = s.spec();
    const Quiver& q = s.initial();
    const int r = spec.rank, l = spec.level;
    CheckResult res{"boundary tuples"};
    auto target_at_level = [&](const VertexMeta& m) -> std::pair<int, int> {
        switch (spec.family) {
            case Family::C:
                return m.col <= r - 1 ? std::pair{m.col, 2 * l - m.row} : std::pair{m.col, l - m.row};
            case Family::F4:
                return (m.col == 3 || m.col == 4) ? std::pair{m.col, 2 * l - m.row}
                                                  : std::pair{m.col, l - m.row};
            default:
                return m.col == 4 ? std::pair{4, 3 * l - m.row} : std::pair{m.col, l - m.row};
        }
    };
    auto target_at_minus_hdual = [&](const VertexMeta& m) -> std::pair<int, int> {
        switch (spec.family) {
            case Family::C:
                if (r % 2 == 0 && m.col >= r) return {2 * r + 1 - m.col, m.row};
                return {m.col, m.row};
            case Family::F4:
                return (m.col == 3 || m.col == 4) ? std::pair{m.col, m.row} : std::pair{7 - m.col, m.row};
            default:
                return {m.col, m.row};
        }
    };
    const int n_level = s.t() * l, n_back = -s.t() * s.cartan().h_dual;
    for (int v = 0; v < q.size(); ++v) {
        const VertexMeta& m = q.meta()[v];
        auto [c1, r1] = target_at_level(m);
        res.expect(run.y(v, n_level) == invert(generator(q.size(), q.at(c1, r1))), [&] {
            return "y_(" + std::to_string(m.col) + "," + std::to_string(m.row) + ")(l) mismatch";
        });
        auto [c2, r2] = target_at_minus_hdual(m);
        res.expect(run.y(v, n_back) == invert(generator(q.size(), q.at(c2, r2))), [&] {
            return "y_(" + std::to_string(m.col) + "," + std::to_string(m.row) + ")(-h^vee) mismatch";
        });
    }
    return res;
}

nlohmann::json tropical_report(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    nlohmann::json points = nlohmann::json::array();
    for (int n = std::max(run.n_lo(), -s.t() * s.cartan().h_dual); n < 2 * s.half_period_n(); ++n)
        for (int v : s.mutation_set(n)) {
            const auto& m = s.initial().meta()[v];
            points.push_back({{"vertex", v},
                              {"col", m.col},
                              {"row", m.row},
                              {"u", format_time(n, s.t())},
                              {"exps", run.y(v, n)},
                              {"sign", to_string(sign_of(run.y(v, n)))}});
        }
    const SignCounts c = count_signs(run);
    const auto [ep, en] = expected_sign_counts(s.spec());
    return {{"case", s.spec().id()},
            {"points", points},
            {"counts", {{"positive", c.positive}, {"negative", c.negative}, {"unit", c.unit}, {"mixed", c.mixed}}},
            {"expected", {{"positive", ep}, {"negative", en}}}};
}

}  // namespace clab
