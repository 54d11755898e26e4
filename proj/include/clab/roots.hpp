/**
 * \file roots.hpp
 *
 * Simply-laced root systems (A_n, D_n, E_6 and a relabelled D_4) with the
 * piecewise-linear reflections sigma_i on the almost positive roots, the
 * composite maps sigma of each family, orbit decompositions, the bracket
 * notations used to print roots, and the t-vector identities that tie the
 * tropical coefficients to alpha_i(u).
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clab/check.hpp"
#include "clab/tropical.hpp"

namespace clab {

class RootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Coefficients over the simple roots alpha_1..alpha_n (index 0 is alpha_1). */
using RootVector = std::vector<int>;

/** How roots are written: [i,j] intervals (A, D with {i,j}), [k^m,...] multisets (E), or sums. */
enum class Notation { interval, multiset, sum };

class RootSystem {
public:
    /** Standard labelling: type 'A', 'D' (chain 1..n-2 with n-1, n attached to n-2) or 'E' (n = 6). */
    static RootSystem make(char type, int n);
    /** Arbitrary simply-laced diagram on 1..n. */
    static RootSystem from_edges(std::string name, int n, std::vector<std::pair<int, int>> edges,
                                 Notation notation);

    const std::string& name() const { return name_; }
    int rank() const { return n_; }
    Notation notation() const { return notation_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
    /** Positive roots ordered by height, then lexicographically. */
    const std::vector<RootVector>& positive_roots() const { return positive_; }

    RootVector simple(int i) const;
    RootVector neg_simple(int i) const;
    bool is_positive(const RootVector& a) const { return index_.count(a) > 0; }
    /** Index of the negated simple root, or 0. */
    int neg_simple_index(const RootVector& a) const;
    bool is_almost_positive(const RootVector& a) const { return is_positive(a) || neg_simple_index(a) > 0; }

    /** Linear reflection s_i. */
    RootVector reflect(int i, const RootVector& a) const;
    /** Piecewise-linear sigma_i; throws RootError when a is not almost positive. */
    RootVector sigma(int i, const RootVector& a) const;

    std::string format(const RootVector& a) const;
    /** Parses the printed forms, including LaTeX such as "$-\alpha_{1}$" or "\{6,11\}". */
    RootVector parse(const std::string& text) const;

private:
    std::string name_;
    int n_ = 0;
    Notation notation_ = Notation::sum;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVector> positive_;
    std::map<RootVector, int> index_;
    std::map<RootVector, std::string> names_;  // bracket names for interval notation

    void init();
};

/** A composite map written left to right; the rightmost factor acts first. */
struct SigmaMap {
    std::vector<int> word;
    std::string name;
};

RootVector sigma_apply(const RootSystem& rs, const SigmaMap& map, const RootVector& a);
/** k-th power of the map; negative k applies the inverse (each sigma_i is an involution). */
RootVector sigma_power(const RootSystem& rs, const SigmaMap& map, const RootVector& a, int k);

/** sigma_- sigma_+ sigma_{r+1} sigma_- sigma_+ sigma_r on D_{r+1}, J_+ = {i <= r-1 : r+i even}. */
SigmaMap sigma_C_D(int r);
/** sigma_- sigma_+ on A_{r-1}, J_+ = {i : r+i odd}. */
SigmaMap sigma_C_A(int r);
/** sigma_3 (sigma_4 sigma_2 sigma_6) sigma_3 (sigma_4 sigma_1 sigma_5) on E_6. */
SigmaMap sigma_F4();
/** sigma_3 sigma_4 sigma_1 sigma_4 sigma_2 sigma_4 on D_4 with 4 the central node. */
SigmaMap sigma_G2();
/** sigma'_- sigma'_+ on A_{2r+1}, J'_+ = {i : i-r even}. */
SigmaMap sigma_A_coxeter(int r);

/** D_4 labelled with 1 - 4 - 2 and 3 attached to 4. */
RootSystem d4_central();
/** The root system carrying alpha_i(u) for a family (D_{r+1}, E_6 or D_4). */
RootSystem core_root_system(Family f, int r);
SigmaMap core_sigma(Family f, int r);

/**
 * Successive images seed, sigma(seed), ... ending at the first negative
 * simple root after the seed or at the return to the seed (included).
 */
std::vector<RootVector> orbit_chain(const RootSystem& rs, const SigmaMap& map, const RootVector& seed);

struct Orbit {
    RootVector seed;
    std::vector<RootVector> chain;
};

/**
 * Chains from -alpha_1..-alpha_n, then from the uncovered simple roots,
 * then from any other uncovered positive root.
 */
std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const SigmaMap& map);

/** Positive entries of the chains cover Phi_+ exactly once. */
CheckResult check_orbit_partition(const RootSystem& rs, const std::vector<Orbit>& orbits);
/** Each sigma_i is an involution on Phi_{>=-1}. */
CheckResult check_sigma_involutions(const RootSystem& rs);
/** Orbit lengths and end points of the D_{r+1} chains. */
CheckResult check_D_orbit_lengths(int r);

/**
 * alpha_i(u) on the family's core root system; n is u in units of 1/t.
 * Returns nullopt when (i, u) is not in the case table or u is outside
 * -h^vee <= u < 0 (unless extended).
 */
std::optional<RootVector> alpha_of(Family f, int r, int i, int n, bool extended = false);

/**
 * Entry of the D_{r+1} orbit table at row i and u = n/2; row r stands for
 * the merged last row (alpha_r at even u, alpha_{r+1} at odd u).
 */
std::optional<RootVector> orbit_table_entry(int r, int row, int n);

/** The recurrences of alpha_i(u) for type C on -h^vee <= u < 0. */
CheckResult check_alpha_recurrence(int r);

/** rho : Phi_+(D_{r+1}) -> Phi_+(A_{2r+1}) by the bracket case table. */
RootVector rho(const RootSystem& d, const RootSystem& a, const RootVector& beta);
/** rho is a bijection onto the orbits O'_1..O'_r and rho sigma = (s')^2 rho. */
CheckResult check_rho(int r);

/** Specialized tropical exponents versus -alpha_i(u) (and the A part and zero cases for C). */
CheckResult check_tvectors(const TropicalRun& run);

/**
 * Compares a transcribed D_{r+1} orbit table, {"r": r, "entries": [{"row",
 * "u", "text"}...]}, entry by entry against orbit_table_entry; also checks
 * that every cell of the table is present.
 */
CheckResult check_orbit_table_fixture(const nlohmann::json& table);

/**
 * Compares transcribed orbit chains (lists of printed roots) with the chains
 * of orbit_decomposition: same chains, same order within each chain.
 */
CheckResult check_orbit_list_fixture(const RootSystem& rs, const SigmaMap& map, const nlohmann::json& chains);

/** Printable orbit table: one line per chain in the system's notation. */
std::vector<std::string> orbit_table_lines(const RootSystem& rs, const SigmaMap& map);

}  // namespace clab
