/**
 * \file mutclass.hpp
 *
 * Isomorphism-invariant keys for quivers and a bidirectional breadth-first
 * search for mutation sequences between two quivers up to isomorphism.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clab/check.hpp"
#include "clab/quiver.hpp"

namespace clab {

/** Largest vertex count accepted by canonical_key. */
inline constexpr int max_key_vertices = 24;

/**
 * Canonical encoding of a quiver up to vertex permutation: colour refinement
 * followed by individualization of the first non-singleton cell, keeping the
 * lexicographically smallest upper-triangle encoding. Entries must fit in a
 * signed byte. Throws QuiverError above max_key_vertices.
 */
std::string canonical_key(const Quiver& q);

/** Canonical labelling: vertex v goes to position order[v] in the key. */
std::vector<int> canonical_order(const Quiver& q);

struct MutationPath {
    Quiver start;
    std::vector<int> moves;
    /** Isomorphism from the replayed quiver onto the target. */
    VertexPermutation final_iso;
};

/** Mutates start along the moves. */
Quiver replay(const MutationPath& path);

struct SearchOptions {
    int depth_cap = 12;       ///< per side
    long node_cap = 1000000;  ///< distinct classes over both sides
    int threads = 1;
};

struct SearchStats {
    long nodes = 0;
    int depth_left = 0;
    int depth_right = 0;
    long skipped_large = 0;  ///< children with a multiplicity beyond a signed byte
    bool exhausted = false;  ///< caps reached without a meeting point
};

/**
 * Bidirectional BFS over isomorphism classes. Returns a path from q1 whose
 * end is isomorphic to q2, or nothing when the caps are exhausted (this is
 * inconclusive, never a proof of inequivalence).
 */
std::optional<MutationPath> search_equivalence(const Quiver& q1, const Quiver& q2, const SearchOptions& opt = {},
                                               SearchStats* stats = nullptr);

/** Replays the path and confirms the end is isomorphic to the target. */
CheckResult verify_path(const MutationPath& path, const Quiver& target);

/** Thread count from CLAB_THREADS (default 1). */
int threads_from_env();

}  // namespace clab
