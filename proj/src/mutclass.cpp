/**
 * \file mutclass.cpp
 *
 * Canonical keys by colour refinement with individualization, and the
 * bidirectional mutation search.
 */
#include "clab/mutclass.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_map>

namespace clab {

namespace {

class Canonizer {
public:
    explicit Canonizer(const Quiver& q) : q_(q), n_(q.size()) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (q(i, j) != 0) adj_[i].emplace_back(j, q(i, j));
    }

    std::vector<int> run() {
        search(refine(std::vector<int>(n_, 0)));
        return best_order_;
    }

    const std::string& best() const { return best_; }

private:
    const Quiver& q_;
    int n_;
    std::map<int, std::vector<std::pair<int, int>>> adj_;
    std::string best_;
    std::vector<int> best_order_;
    bool have_best_ = false;

    // Splits colour classes by the multiset of (neighbour colour, weight) until stable.
    // New colours are ranked by (old colour, signature), so the result is canonical.
    std::vector<int> refine(std::vector<int> col) const {
        int classes = count(col);
        while (true) {
            std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n_);
            for (int v = 0; v < n_; ++v) {
                sig[v].first = col[v];
                auto it = adj_.find(v);
                if (it != adj_.end())
                    for (auto [w, b] : it->second) sig[v].second.emplace_back(col[w], b);
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < n_; ++v)
                col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            const int now = static_cast<int>(sorted.size());
            if (now == classes) return col;
            classes = now;
        }
    }

    static int count(const std::vector<int>& col) {
        return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    }

    std::string encode(const std::vector<int>& order) const {
        std::vector<int> vertex(n_);
        for (int v = 0; v < n_; ++v) vertex[order[v]] = v;
        std::string s;
        s.reserve(1 + n_ * (n_ - 1) / 2);
        s.push_back(static_cast<char>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) s.push_back(static_cast<char>(q_(vertex[i], vertex[j])));
        return s;
    }

    void search(const std::vector<int>& col) {
        if (count(col) == n_) {
            std::string s = encode(col);
            if (!have_best_ || s < best_) {
                best_ = std::move(s);
                best_order_ = col;
                have_best_ = true;
            }
            return;
        }
        // first non-singleton cell
        std::vector<int> size(n_, 0);
        for (int c : col) ++size[c];
        int target = 0;
        while (size[target] < 2) ++target;
        for (int v = 0; v < n_; ++v) {
            if (col[v] != target) continue;
            std::vector<int> next(n_);
            for (int w = 0; w < n_; ++w) next[w] = 2 * col[w] + (col[w] == target && w != v ? 1 : 0);
            search(refine(next));
        }
    }
};

void check_key_input(const Quiver& q) {
    if (q.size() > max_key_vertices)
        throw QuiverError("canonical keys support at most " + std::to_string(max_key_vertices) + " vertices");
    for (int v : q.data())
        if (v < -127 || v > 127) throw QuiverError("arrow multiplicity too large for a canonical key");
}

}  // namespace

std::string canonical_key(const Quiver& q) {
    check_key_input(q);
    Canonizer c(q);
    c.run();
    return c.best();
}

std::vector<int> canonical_order(const Quiver& q) {
    check_key_input(q);
    return Canonizer(q).run();
}

Quiver replay(const MutationPath& path) {
    Quiver q = path.start;
    for (int k : path.moves) mutate_in_place(q, k);
    return q;
}

namespace {

struct Side {
    struct Node {
        int parent;
        int move;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, Quiver>> frontier;  // (node id, quiver)
    int depth = 0;

    std::vector<int> moves_to(int id) const {
        std::vector<int> m;
        for (; nodes[id].parent >= 0; id = nodes[id].parent) m.push_back(nodes[id].move);
        std::reverse(m.begin(), m.end());
        return m;
    }
};

bool representable(const Quiver& q) {
    for (int v : q.data())
        if (v < -127 || v > 127) return false;
    return true;
}

Quiver replay_moves(Quiver q, const std::vector<int>& moves) {
    for (int k : moves) mutate_in_place(q, k);
    return q;
}

// Joins the two half paths through the meeting classes.
MutationPath join(const Quiver& q1, const Quiver& q2, const Side& left, int id_left, const Side& right,
                  int id_right) {
    MutationPath path{q1, left.moves_to(id_left), {}};
    const std::vector<int> back = right.moves_to(id_right);
    const Quiver x0 = replay_moves(q1, path.moves), x1 = replay_moves(q2, back);
    const auto p = find_isomorphism(x1, x0);
    if (!p) throw QuiverError("equal canonical keys without an isomorphism");
    // mutations are involutions: walk the right half backwards, relabelled by p
    for (auto it = back.rbegin(); it != back.rend(); ++it) path.moves.push_back((*p)[*it]);
    const auto iso = find_isomorphism(replay(path), q2);
    if (!iso) throw QuiverError("joined path does not end at the target class");
    path.final_iso = *iso;
    return path;
}

}  // namespace

std::optional<MutationPath> search_equivalence(const Quiver& q1, const Quiver& q2, const SearchOptions& opt,
                                               SearchStats* stats) {
    if (q1.size() != q2.size()) throw QuiverError("quivers of different sizes");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = {};
    Side sides[2];
    const Quiver* roots[2] = {&q1, &q2};
    for (int s = 0; s < 2; ++s) {
        sides[s].nodes.push_back({-1, -1});
        sides[s].index[canonical_key(*roots[s])] = 0;
        sides[s].frontier.push_back({0, *roots[s]});
    }
    st.nodes = 2;
    if (sides[1].index.count(sides[0].index.begin()->first)) return join(q1, q2, sides[0], 0, sides[1], 0);

    const int n = q1.size();
    const int threads = std::max(1, opt.threads);
    while (true) {
        // expand the side with the smaller frontier that may still grow
        int s = -1;
        for (int c = 0; c < 2; ++c) {
            if (sides[c].frontier.empty() || sides[c].depth >= opt.depth_cap) continue;
            if (s < 0 || sides[c].frontier.size() < sides[s].frontier.size()) s = c;
        }
        if (s < 0 || st.nodes >= opt.node_cap) {
            st.exhausted = true;
            return std::nullopt;
        }
        Side& me = sides[s];
        const Side& other = sides[1 - s];
        // children keys, computed in parallel and merged in frontier order
        struct Child {
            int move;
            std::string key;
        };
        const size_t fsize = me.frontier.size();
        std::vector<std::vector<Child>> children(fsize);
        std::vector<long> skipped(threads, 0);
        auto work = [&](int tid) {
            for (size_t f = tid; f < fsize; f += threads) {
                const auto& [id, q] = me.frontier[f];
                for (int k = 0; k < n; ++k) {
                    if (k == me.nodes[id].move) continue;  // undoes the last step
                    Quiver child = mutate(q, k);
                    if (!representable(child)) {
                        ++skipped[tid];
                        continue;
                    }
                    children[f].push_back({k, canonical_key(child)});
                }
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& t : pool) t.join();
        }
        for (long k : skipped) st.skipped_large += k;
        std::vector<std::pair<int, Quiver>> next;
        for (size_t f = 0; f < fsize; ++f) {
            const auto& [id, q] = me.frontier[f];
            for (auto& c : children[f]) {
                if (me.index.count(c.key)) continue;
                const int child_id = static_cast<int>(me.nodes.size());
                me.nodes.push_back({id, c.move});
                ++st.nodes;
                auto hit = other.index.find(c.key);
                if (hit != other.index.end()) {
                    me.depth += 1;
                    st.depth_left = sides[0].depth;
                    st.depth_right = sides[1].depth;
                    return s == 0 ? join(q1, q2, sides[0], child_id, sides[1], hit->second)
                                  : join(q1, q2, sides[0], hit->second, sides[1], child_id);
                }
                me.index.emplace(std::move(c.key), child_id);
                next.push_back({child_id, mutate(q, c.move)});
            }
        }
        me.frontier = std::move(next);
        me.depth += 1;
        st.depth_left = sides[0].depth;
        st.depth_right = sides[1].depth;
    }
}

CheckResult verify_path(const MutationPath& path, const Quiver& target) {
    CheckResult res{"mutation path replay"};
    const Quiver end = replay(path);
    res.expect(apply_perm(end, path.final_iso).same_matrix(target), [] {
        return "the recorded isomorphism does not map the replayed quiver onto the target";
    });
    res.expect(find_isomorphism(end, target).has_value(), [] { return "replayed quiver is not isomorphic to the target"; });
    res.metrics["length"] = path.moves.size();
    return res;
}

int threads_from_env() {
    const char* v = std::getenv("CLAB_THREADS");
    if (!v) return 1;
    try {
        return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace clab
