/**
 * \file schedule.cpp
 *
 * Mutation sets, expected quiver cycle and the labeling bijections.
 */
#include "clab/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace clab {

int floor_mod(int a, int b) {
    int r = a % b;
    return r < 0 ? r + b : r;
}

std::string format_time(int n, int t) {
    int g = std::gcd(std::abs(n), t);
    if (g == 0) g = 1;
    int num = n / g, den = t / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(const GridPoint& p, int t) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.m) + "," + format_time(p.n, t) + ")";
}

int parse_time(const std::string& text, int t) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long num = std::stol(text.substr(0, slash));
        long den = std::stol(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("bad time '" + text + "'");
        if ((num * t) % den != 0)
            throw std::invalid_argument("time '" + text + "' is not a multiple of 1/" + std::to_string(t));
        return static_cast<int>(num * t / den);
    }
    double v = std::stod(text) * t;
    double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9)
        throw std::invalid_argument("time '" + text + "' is not a multiple of 1/" + std::to_string(t));
    return static_cast<int>(rounded);
}

Quiver apply_transform(const Quiver& q0, const Transform& tr) {
    Quiver q = apply_perm(q0, tr.perm);
    return tr.op ? opposite(q) : q;
}

bool is_P_plus(Family f, int r, const GridPoint& p) {
    switch (f) {
        case Family::C:
            if (p.a != r) return floor_mod(r + p.a + p.m + p.n, 2) == 1;
            return floor_mod(p.n, 2) == 0;
        case Family::F4:
            if (p.a <= 2) return floor_mod(p.n, 2) == 0;
            return floor_mod(p.a + p.m + p.n, 2) == 1;
        case Family::G2:
            return floor_mod(p.a + p.m + p.n, 2) == 0;
        default:
            throw ScheduleError("parity is defined for C, F4 and G2 only");
    }
}

bool is_Pprime_plus(Family f, int r, const GridPoint& p) {
    switch (f) {
        case Family::C:
            if (p.a != r) return floor_mod(r + p.a + p.m + p.n, 2) == 0;
            return floor_mod(p.n, 2) == 0;
        case Family::F4:
            if (p.a <= 2) return floor_mod(p.n, 2) == 0;
            return floor_mod(p.a + p.m + p.n, 2) == 0;
        case Family::G2:
            return floor_mod(p.a + p.m + p.n, 2) == 1;
        default:
            throw ScheduleError("parity is defined for C, F4 and G2 only");
    }
}

Schedule::Schedule(const FamilySpec& spec, CycleReading reading) {
    if (spec.family != Family::C && spec.family != Family::F4 && spec.family != Family::G2)
        throw ScheduleError("schedules exist for C, F4 and G2 only");
    spec_ = spec;
    cd_ = cartan_data(spec);
    q0_ = build(spec);
    ref_ = q0_;
    inv_ = clab::involutions(spec);
    init(reading);
}

Schedule Schedule::with_initial(Quiver q) const {
    if (q.size() != q0_.size()) throw ScheduleError("replacement quiver has the wrong size");
    Schedule s = *this;
    s.q0_ = std::move(q);
    return s;
}

void Schedule::init(CycleReading reading) {
    const int n = q0_.size();
    auto collect = [&](auto&& pred) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (pred(q0_.meta()[v])) out.push_back(v);
        return out;
    };
    auto with = [](Fill f, Tag t) {
        return [f, t](const VertexMeta& m) { return m.fill == f && m.tag == t; };
    };
    auto merge = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        return a;
    };
    const VertexPermutation id = identity_perm(n);
    const auto bullets_plus = collect(with(Fill::bullet, Tag::plus));
    const auto bullets_minus = collect(with(Fill::bullet, Tag::minus));

    if (spec_.family == Family::C || spec_.family == Family::F4) {
        const auto circles_plus = collect(with(Fill::circle, Tag::plus));
        const auto circles_minus = collect(with(Fill::circle, Tag::minus));
        sets_ = {merge(circles_plus, bullets_plus), bullets_minus, merge(circles_minus, bullets_plus),
                 bullets_minus};
        expected_ = {{id, false, "Q"},
                     {id, true, "Q^op"},
                     {*inv_.r, false, "r(Q)"},
                     {*inv_.r, true, "r(Q)^op"}};
    } else {
        const Tag regions[6] = {Tag::I, Tag::II, Tag::III, Tag::IV, Tag::V, Tag::VI};
        for (int k = 0; k < 6; ++k) {
            auto circles = collect(with(Fill::circle, regions[k]));
            sets_.push_back(merge(circles, k % 2 == 0 ? bullets_plus : bullets_minus));
        }
        // The 3-cycles are written (312) and (231). Read in one-line notation,
        // (312) sends columns 1,2,3 to 3,1,2; this is the reading under which
        // the quiver cycle closes. The cycle reading is kept for comparison.
        const std::string c312 = reading == CycleReading::cycle ? "231" : "312";
        const std::string c231 = reading == CycleReading::cycle ? "312" : "231";
        expected_ = {{id, false, "Q"},
                     {inv_.nu.at("132"), true, "nu(23)(Q)^op"},
                     {inv_.nu.at(c312), false, "nu(312)(Q)"},
                     {inv_.nu.at("321"), true, "nu(13)(Q)^op"},
                     {inv_.nu.at(c231), false, "nu(231)(Q)"},
                     {inv_.nu.at("213"), true, "nu(12)(Q)^op"}};
    }
    member_.assign(sets_.size(), std::vector<char>(n, 0));
    for (size_t k = 0; k < sets_.size(); ++k)
        for (int v : sets_[k]) member_[k][v] = 1;
}

const std::vector<int>& Schedule::mutation_set(int n) const { return sets_[floor_mod(n, cycle())]; }

bool Schedule::is_p_plus(int v, int n) const { return member_[floor_mod(n, cycle())][v] != 0; }

const Transform& Schedule::expected(int n) const { return expected_[floor_mod(n, cycle())]; }

std::vector<ScheduleStep> Schedule::steps(int n_from, int n_to) const {
    std::vector<ScheduleStep> out;
    for (int n = n_from; n < n_to; ++n) out.push_back({n, n + 1, mutation_set(n), expected(n + 1)});
    return out;
}

void Schedule::check_quiver(int n, const Quiver& q) const {
    if (!q.is_simple_skew())
        throw ScheduleError("quiver at u=" + format_time(n, t()) + " has a multiple arrow");
    if (!q.same_matrix(expected_quiver(n)))
        throw ScheduleError("quiver at u=" + format_time(n, t()) + " differs from the expected " +
                            expected(n).name);
}

void Schedule::check_set(int n, const Quiver& q) const {
    const auto& S = mutation_set(n);
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (q(S[i], S[j]) != 0)
                throw ScheduleError("mutation set at u=" + format_time(n, t()) +
                                    " contains adjacent vertices");
}

std::pair<int, int> Schedule::vertex_label(int v) const {
    const auto& m = ref_.meta()[v];
    const int r = spec_.rank;
    switch (spec_.family) {
        case Family::C:
            return {m.col <= r - 1 ? m.col : r, m.row};
        case Family::F4:
            if (m.col == 3 || m.col == 4) return {m.col, m.row};
            return {m.col <= 2 ? m.col : 7 - m.col, m.row};
        case Family::G2:
            return {m.col <= 3 ? 1 : 2, m.row};
        default:
            break;
    }
    throw ScheduleError("no labels for this family");
}

GridPoint Schedule::mutation_point_label(int v, int n) const {
    if (!is_p_plus(v, n))
        throw ScheduleError("vertex " + std::to_string(v) + " is not mutated at u=" + format_time(n, t()));
    auto [a, m] = vertex_label(v);
    GridPoint p{a, m, n};
    if (!is_Pprime_plus(spec_.family, spec_.rank, p))
        throw ScheduleError("mutation point label " + to_string(p, t()) + " violates P'_+");
    return p;
}

int Schedule::label_g_prime(const GridPoint& p) const {
    const int r = spec_.rank;
    if (p.a < 1 || p.a > cd_.rank() || p.m < 1 || p.m > cd_.ta(p.a) * spec_.level - 1)
        throw ScheduleError("grid point " + to_string(p, t()) + " outside the index set");
    if (!is_Pprime_plus(spec_.family, r, p))
        throw ScheduleError("grid point " + to_string(p, t()) + " violates P'_+");
    int v = -1;
    switch (spec_.family) {
        case Family::C:
            if (p.a != r) v = ref_.at(p.a, p.m);
            else {
                // u = n/2 is an integer here
                const int u = p.n / 2;
                v = ref_.at(floor_mod(p.m + u, 2) == 0 ? r + 1 : r, p.m);
            }
            break;
        case Family::F4:
            if (p.a >= 3) v = ref_.at(p.a, p.m);
            else {
                const int u = p.n / 2;
                v = ref_.at(floor_mod(p.a + p.m + u, 2) == 0 ? p.a : 7 - p.a, p.m);
            }
            break;
        case Family::G2:
            if (p.a == 2) v = ref_.at(4, p.m);
            else {
                const int c = floor_mod(3 * p.m + p.n, 6);
                const int col = c == 0 ? 1 : c == 4 ? 2 : c == 2 ? 3 : -1;
                if (col < 0) throw ScheduleError("grid point " + to_string(p, t()) + " has no G2 column");
                v = ref_.at(col, p.m);
            }
            break;
        default:
            throw ScheduleError("no labels for this family");
    }
    return v;
}

std::pair<int, int> Schedule::label_g(const GridPoint& p) const {
    if (!is_P_plus(spec_.family, spec_.rank, p))
        throw ScheduleError("grid point " + to_string(p, t()) + " violates P_+");
    const int n = p.n + cd_.t / cd_.ta(p.a);
    return {label_g_prime({p.a, p.m, n}), n};
}

std::vector<GridPoint> Schedule::grid(int n_from, int n_to, bool prime) const {
    std::vector<GridPoint> out;
    for (int n = n_from; n < n_to; ++n)
        for (int a = 1; a <= cd_.rank(); ++a)
            for (int m = 1; m <= cd_.ta(a) * spec_.level - 1; ++m) {
                GridPoint p{a, m, n};
                bool in = prime ? is_Pprime_plus(spec_.family, spec_.rank, p)
                                : is_P_plus(spec_.family, spec_.rank, p);
                if (in) out.push_back(p);
            }
    return out;
}

}  // namespace clab

namespace clab {

CheckResult check_schedule_cycle(const Schedule& s, int n_lo, int n_hi) {
    CheckResult res{"quiver cycle " + s.spec().id()};
    // forward from time 0, then backward from time 0
    auto walk = [&](int from, int to, int dir) {
        Quiver q = s.initial();
        for (int n = from; n != to; n += dir) {
            const int mutated_at = dir > 0 ? n : n - 1;
            const int reached = dir > 0 ? n + 1 : n - 1;
            try {
                s.check_set(mutated_at, q);
                q = composite_mutate(q, s.mutation_set(mutated_at));
                s.check_quiver(reached, q);
                ++res.checked;
            } catch (const std::exception& e) {
                res.fail(e.what());
                if (!res.metrics.contains("first_failure_step"))
                    res.metrics["first_failure_step"] = format_time(reached, s.t());
                return;
            }
        }
    };
    walk(0, n_hi, 1);
    walk(0, n_lo, -1);
    res.metrics["steps"] = n_hi - n_lo;
    return res;
}

CheckResult check_labelings(const Schedule& s) {
    CheckResult res{"labelings " + s.spec().id()};
    const int period = 2 * s.half_period_n();
    long points = 0;
    for (int n = 0; n < period; ++n)
        for (int v : s.mutation_set(n)) {
            ++points;
            try {
                const GridPoint p = s.mutation_point_label(v, n);
                res.expect(s.label_g_prime(p) == v, [&] {
                    return "g' does not invert the label " + to_string(p, s.t());
                });
                const auto [w, k] = s.label_g({p.a, p.m, n - s.t() / s.ta(p.a)});
                res.expect(w == v && k == n, [&] { return "g is not g' shifted by one step at " + to_string(p, s.t()); });
            } catch (const ScheduleError& e) {
                res.fail(e.what());
            }
        }
    const long grid_points = static_cast<long>(s.grid(0, period, true).size());
    res.expect(grid_points == points, [&] {
        return std::to_string(grid_points) + " points in P'_+ over a period, " + std::to_string(points) +
               " mutation points";
    });
    res.metrics["points"] = points;
    return res;
}

}  // namespace clab
