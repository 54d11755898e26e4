/**
 * \file builders.hpp
 *
 * Constructors for the quivers Q_l(C_r), Q_l(F_4), Q_l(G_2) and the square
 * products X_r [] A_{l-1}, with vertex classification and symmetry
 * involutions, plus the Lie-theoretic constants of each family.
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clab/quiver.hpp"

namespace clab {

enum class Family { C, F4, G2, SquareA, SquareD, SquareE6 };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct FamilySpec {
    Family family = Family::C;
    int rank = 2;   ///< r; fixed to 4 for F4 and 2 for G2
    int level = 2;  ///< l >= 2

    bool operator==(const FamilySpec&) const = default;
    /** Short identifier such as "C3_l2" or "G2_l4". */
    std::string id() const;
};

/** Throws std::invalid_argument when the spec is out of range. */
void validate(const FamilySpec& spec);

/** Builds "C:3:2" / "G2:3" / "D:4:3" style specs as used by the command line. */
FamilySpec parse_spec(const std::string& text);

struct CartanData {
    int h = 0;
    int h_dual = 0;
    int t = 1;
    std::vector<int> t_a;  ///< t_a[a-1] for a = 1..r

    int ta(int a) const { return t_a.at(a - 1); }
    int rank() const { return static_cast<int>(t_a.size()); }
    int sum_ta() const;
};

/** Cartan data for C, F4 and G2 (rank is ignored for F4/G2). */
CartanData cartan_data(Family family, int rank = 0);
CartanData cartan_data(const FamilySpec& spec);

Quiver build(const FamilySpec& spec);

/** Expected vertex count from the index-set formulas. */
int expected_vertex_count(const FamilySpec& spec);

struct Involutions {
    std::optional<VertexPermutation> r;  ///< left-right reflection (C, F4)
    VertexPermutation omega;             ///< up-down reflection
    /** nu_s for G2, keyed by the one-line notation "s(1)s(2)s(3)". */
    std::map<std::string, VertexPermutation> nu;
};

Involutions involutions(const FamilySpec& spec);

/**
 * Column permutation nu_s on Q_l(G_2): vertex (i,k) goes to (s(i),k) for
 * i <= 3 and column 4 is fixed. s is given in one-line notation.
 */
VertexPermutation nu_permutation(const Quiver& q, std::array<int, 3> s);

/** Dynkin diagram of a simply-laced type as an edge list on 1..n. */
std::vector<std::pair<int, int>> dynkin_edges(char type, int n);

}  // namespace clab
