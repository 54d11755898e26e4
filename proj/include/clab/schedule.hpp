/**
 * \file schedule.hpp
 *
 * Time-indexed mutation sequences for Q_l(C_r), Q_l(F_4) and Q_l(G_2),
 * parity bookkeeping, and the labelings between grid points (a,m,u) and
 * mutation points (vertex, u).
 *
 * Time u is always stored as an integer numerator n over the fixed
 * denominator t of the family: u = n/t.
 */
#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clab/builders.hpp"
#include "clab/check.hpp"
#include "clab/quiver.hpp"

namespace clab {

class ScheduleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** (a, m, u) with u = n/t. */
struct GridPoint {
    int a = 0;
    int m = 0;
    int n = 0;

    auto operator<=>(const GridPoint&) const = default;
};

std::string to_string(const GridPoint& p, int t);

/** Formats n/t in lowest terms, e.g. "-3/2" or "4". */
std::string format_time(int n, int t);
/** Parses "3", "-1/2", "0.5" into a numerator over t; throws if not a multiple of 1/t. */
int parse_time(const std::string& text, int t);

/** Expected quiver shape: opposite(apply_perm(Q0, perm)) when op is set. */
struct Transform {
    VertexPermutation perm;
    bool op = false;
    std::string name;  ///< e.g. "Q", "r(Q)^op", "nu(13)(Q)^op"
};

Quiver apply_transform(const Quiver& q0, const Transform& tr);

struct ScheduleStep {
    int n_from = 0;
    int n_to = 0;
    std::vector<int> vertices;  ///< composite mutation at time n_from
    Transform expected;         ///< quiver at time n_to, relative to the initial quiver
};

/** Parity flavours on grid points. */
bool is_P_plus(Family f, int r, const GridPoint& p);
bool is_Pprime_plus(Family f, int r, const GridPoint& p);

/** The G_2 cycles (312) and (231) can be read in cycle or one-line notation. */
enum class CycleReading { cycle, one_line };

class Schedule {
public:
    explicit Schedule(const FamilySpec& spec, CycleReading reading = CycleReading::one_line);

    /**
     * Same schedule, driven from a different initial quiver (negative
     * controls); the expected quivers stay those of the built quiver.
     */
    Schedule with_initial(Quiver q) const;

    const FamilySpec& spec() const { return spec_; }
    const CartanData& cartan() const { return cd_; }
    const Quiver& initial() const { return q0_; }
    const Involutions& involutions() const { return inv_; }
    int t() const { return cd_.t; }
    int ta(int a) const { return cd_.ta(a); }
    /** Number of time steps n in one period of the quiver cycle (2t). */
    int cycle() const { return static_cast<int>(sets_.size()); }
    /** h^vee + l; half period in u. */
    int half_period_u() const { return cd_.h_dual + spec_.level; }
    /** Half period in time steps: t (h^vee + l). */
    int half_period_n() const { return cd_.t * half_period_u(); }

    /** Composite mutation set S(n), mutated at time n in forward direction. */
    const std::vector<int>& mutation_set(int n) const;
    /** (vertex, n) is a mutation point: p_+ . */
    bool is_p_plus(int v, int n) const;
    const Transform& expected(int n) const;
    Quiver expected_quiver(int n) const { return apply_transform(ref_, expected(n)); }

    std::vector<ScheduleStep> steps(int n_from, int n_to) const;

    /** (a, m) carried by a vertex. */
    std::pair<int, int> vertex_label(int v) const;
    /** Grid point (a, m, n) in P'_+ belonging to the mutation point (v, n). */
    GridPoint mutation_point_label(int v, int n) const;
    /** g': (a,m,u) in P'_+ -> vertex mutated at u. */
    int label_g_prime(const GridPoint& p) const;
    /** g: (a,m,u) in P_+ -> (vertex, time numerator) with x_v at that time = T(a,m,u). */
    std::pair<int, int> label_g(const GridPoint& p) const;

    /** All grid points of I_l with n in [n_from, n_to); prime selects P'_+ instead of P_+. */
    std::vector<GridPoint> grid(int n_from, int n_to, bool prime) const;

    /** Throws ScheduleError if q is not the expected quiver at time n. */
    void check_quiver(int n, const Quiver& q) const;
    /** Throws ScheduleError if two vertices of S(n) are adjacent in q. */
    void check_set(int n, const Quiver& q) const;

private:
    Schedule() = default;
    void init(CycleReading reading);

    FamilySpec spec_;
    CartanData cd_;
    Quiver q0_;
    Quiver ref_;  ///< built quiver; the expected quivers are taken from it
    Involutions inv_;
    std::vector<std::vector<int>> sets_;
    std::vector<Transform> expected_;
    std::vector<std::vector<char>> member_;
};

int floor_mod(int a, int b);

/**
 * Composite mutations forward over [0, n_hi) and backward over [n_lo, 0)
 * from the initial quiver; each step's quiver is compared with the expected
 * one. The first failing step is reported as metric first_failure_step.
 */
CheckResult check_schedule_cycle(const Schedule& s, int n_lo, int n_hi);

/** mutation_point_label and g' are inverse over one period, g is g' one step earlier, and |P'_+| matches. */
CheckResult check_labelings(const Schedule& s);

/**
 * Drives a seed along the schedule over [n_lo, n_hi) (n_lo <= 0 <= n_hi),
 * starting from seed(0). visit(n, seed) receives seed(n) before the mutation
 * at time n. Seed must expose a member Q (the quiver) and mutate_at(k).
 * The quiver is checked against the schedule after every step.
 */
template <class Seed, class Visit>
void run_schedule(const Schedule& s, const Seed& seed0, int n_lo, int n_hi, Visit&& visit) {
    if (n_lo > 0 || n_hi < 0) throw ScheduleError("run window must contain time 0");
    Seed seed = seed0;
    for (int n = 0; n < n_hi; ++n) {
        visit(n, static_cast<const Seed&>(seed));
        s.check_set(n, seed.Q);
        for (int k : s.mutation_set(n)) seed.mutate_at(k);
        s.check_quiver(n + 1, seed.Q);
    }
    seed = seed0;
    for (int n = -1; n >= n_lo; --n) {
        s.check_set(n, seed.Q);
        for (int k : s.mutation_set(n)) seed.mutate_at(k);
        s.check_quiver(n, seed.Q);
        visit(n, static_cast<const Seed&>(seed));
    }
}

/** Seed that carries only the quiver. */
struct QuiverSeed {
    Quiver Q;
    void mutate_at(int k) { mutate_in_place(Q, k); }
};

}  // namespace clab
