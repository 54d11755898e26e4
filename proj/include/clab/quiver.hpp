/**
 * \file quiver.hpp
 *
 * Quivers without loops or 2-cycles, stored as skew-symmetric integer
 * matrices, together with matrix mutation and the symmetry actions used by
 * the periodicity checks.
 *
 * Convention: an arrow i -> j is recorded as B(i,j) = 1, B(j,i) = -1.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace clab {

enum class Fill { circle, bullet };

/** Vertex tag: a sign for the bipartite mutation classes, or a region label. */
enum class Tag { none, plus, minus, I, II, III, IV, V, VI };

std::string to_string(Fill f);
std::string to_string(Tag t);
Tag tag_from_string(const std::string& s);

struct VertexMeta {
    int col = 0;  ///< column index i
    int row = 0;  ///< row index i'
    Fill fill = Fill::bullet;
    Tag tag = Tag::none;

    bool operator==(const VertexMeta&) const = default;
};

/** Permutation of vertex indices: vertex v is sent to perm[v]. */
using VertexPermutation = std::vector<int>;

class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int n);
    Quiver(int n, std::vector<VertexMeta> meta);

    int size() const { return n_; }

    int operator()(int i, int j) const { return b_[static_cast<size_t>(i) * n_ + j]; }
    /** Sets B(i,j)=v and B(j,i)=-v. */
    void set(int i, int j, int v);
    /** Adds the arrow i -> j; adding an arrow twice or against an existing one throws. */
    void add_arrow(int i, int j);

    const std::vector<VertexMeta>& meta() const { return meta_; }
    std::vector<VertexMeta>& meta() { return meta_; }
    const std::vector<int>& data() const { return b_; }

    /** Index of the vertex with the given (column, row), or -1. */
    int find(int col, int row) const;
    /** Same as find() but throws when absent. */
    int at(int col, int row) const;

    /** True if every entry is in {-1,0,1} and B is skew-symmetric with zero diagonal. */
    bool is_simple_skew() const;
    bool is_skew() const;

    /** Matrix equality (metadata ignored). */
    bool same_matrix(const Quiver& o) const { return n_ == o.n_ && b_ == o.b_; }
    bool operator==(const Quiver& o) const { return same_matrix(o); }

    std::vector<std::pair<int, int>> arrows() const;

private:
    int n_ = 0;
    std::vector<int> b_;
    std::vector<VertexMeta> meta_;
};

/** Matrix mutation at k. */
Quiver mutate(const Quiver& q, int k);
/** In-place variant, used by the long schedule runs. */
void mutate_in_place(Quiver& q, int k);

/**
 * Mutation at a set of pairwise non-adjacent vertices; the result does not
 * depend on the order. Throws QuiverError if two vertices of S are adjacent.
 */
Quiver composite_mutate(const Quiver& q, const std::vector<int>& S);

Quiver opposite(const Quiver& q);

/** Conjugation: B'(p(i), p(j)) = B(i, j). Metadata is carried along. */
Quiver apply_perm(const Quiver& q, const VertexPermutation& p);

bool is_permutation(const VertexPermutation& p);
VertexPermutation inverse(const VertexPermutation& p);
/** (a*b)(v) = a(b(v)). */
VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b);
VertexPermutation identity_perm(int n);

/**
 * Returns p with apply_perm(q1, p) == q2 (as matrices), or nothing.
 * Backtracking with degree-profile pruning.
 */
std::optional<VertexPermutation> find_isomorphism(const Quiver& q1, const Quiver& q2);

nlohmann::json to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

}  // namespace clab
