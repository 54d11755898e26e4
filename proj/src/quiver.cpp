/**
 * \file quiver.cpp
 *
 * Matrix mutation, symmetry actions and isomorphism search for quivers.
 */
#include "clab/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace clab {

std::string to_string(Fill f) { return f == Fill::circle ? "circle" : "bullet"; }

std::string to_string(Tag t) {
    switch (t) {
        case Tag::none: return "none";
        case Tag::plus: return "+";
        case Tag::minus: return "-";
        case Tag::I: return "I";
        case Tag::II: return "II";
        case Tag::III: return "III";
        case Tag::IV: return "IV";
        case Tag::V: return "V";
        case Tag::VI: return "VI";
    }
    return "none";
}

Tag tag_from_string(const std::string& s) {
    static const std::map<std::string, Tag> table = {
        {"none", Tag::none}, {"+", Tag::plus}, {"-", Tag::minus}, {"I", Tag::I},
        {"II", Tag::II},     {"III", Tag::III}, {"IV", Tag::IV},  {"V", Tag::V},
        {"VI", Tag::VI}};
    auto it = table.find(s);
    if (it == table.end()) throw QuiverError("unknown vertex tag '" + s + "'");
    return it->second;
}

Quiver::Quiver(int n) : n_(n), b_(static_cast<size_t>(n) * n, 0), meta_(n) {
    if (n < 0) throw QuiverError("negative vertex count");
}

Quiver::Quiver(int n, std::vector<VertexMeta> meta) : Quiver(n) {
    if (static_cast<int>(meta.size()) != n) throw QuiverError("metadata size mismatch");
    meta_ = std::move(meta);
}

void Quiver::set(int i, int j, int v) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw QuiverError("vertex index out of range");
    if (i == j && v != 0) throw QuiverError("loops are not allowed");
    b_[static_cast<size_t>(i) * n_ + j] = v;
    b_[static_cast<size_t>(j) * n_ + i] = -v;
}

void Quiver::add_arrow(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw QuiverError("vertex index out of range");
    if (i == j) throw QuiverError("loops are not allowed");
    if ((*this)(i, j) != 0)
        throw QuiverError("arrow " + std::to_string(i) + "->" + std::to_string(j) +
                          " conflicts with an existing arrow");
    set(i, j, 1);
}

int Quiver::find(int col, int row) const {
    for (int v = 0; v < n_; ++v)
        if (meta_[v].col == col && meta_[v].row == row) return v;
    return -1;
}

int Quiver::at(int col, int row) const {
    int v = find(col, row);
    if (v < 0)
        throw QuiverError("no vertex (" + std::to_string(col) + "," + std::to_string(row) + ")");
    return v;
}

bool Quiver::is_skew() const {
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0) return false;
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

bool Quiver::is_simple_skew() const {
    if (!is_skew()) return false;
    return std::all_of(b_.begin(), b_.end(), [](int v) { return v >= -1 && v <= 1; });
}

std::vector<std::pair<int, int>> Quiver::arrows() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int c = 0; c < (*this)(i, j); ++c) out.emplace_back(i, j);
    return out;
}

void mutate_in_place(Quiver& q, int k) {
    const int n = q.size();
    if (k < 0 || k >= n) throw QuiverError("mutation index " + std::to_string(k) + " out of range");
    // B'_ij = B_ij + sgn(B_ik) max(B_ik B_kj, 0) for i,j != k; only pairs
    // (in-neighbour, out-neighbour) of k change.
    std::vector<int> in, out;
    for (int i = 0; i < n; ++i) {
        if (q(i, k) > 0) in.push_back(i);
        if (q(k, i) > 0) out.push_back(i);
    }
    for (int i : in)
        for (int j : out) q.set(i, j, q(i, j) + q(i, k) * q(k, j));
    for (int i = 0; i < n; ++i)
        if (i != k) q.set(i, k, -q(i, k));
}

Quiver mutate(const Quiver& q, int k) {
    Quiver r = q;
    mutate_in_place(r, k);
    return r;
}

Quiver composite_mutate(const Quiver& q, const std::vector<int>& S) {
    for (size_t a = 0; a < S.size(); ++a)
        for (size_t b = a + 1; b < S.size(); ++b) {
            if (S[a] == S[b]) throw QuiverError("repeated vertex in composite mutation");
            if (q(S[a], S[b]) != 0)
                throw QuiverError("composite mutation at adjacent vertices " +
                                  std::to_string(S[a]) + " and " + std::to_string(S[b]));
        }
    Quiver r = q;
    for (int k : S) mutate_in_place(r, k);
    return r;
}

Quiver opposite(const Quiver& q) {
    Quiver r(q.size(), q.meta());
    for (int i = 0; i < q.size(); ++i)
        for (int j = i + 1; j < q.size(); ++j) r.set(i, j, -q(i, j));
    return r;
}

bool is_permutation(const VertexPermutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

VertexPermutation inverse(const VertexPermutation& p) {
    VertexPermutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
    VertexPermutation r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

VertexPermutation identity_perm(int n) {
    VertexPermutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Quiver apply_perm(const Quiver& q, const VertexPermutation& p) {
    if (static_cast<int>(p.size()) != q.size() || !is_permutation(p))
        throw QuiverError("apply_perm: not a permutation of the vertex set");
    std::vector<VertexMeta> meta(q.size());
    for (int i = 0; i < q.size(); ++i) meta[p[i]] = q.meta()[i];
    Quiver r(q.size(), meta);
    for (int i = 0; i < q.size(); ++i)
        for (int j = i + 1; j < q.size(); ++j) r.set(p[i], p[j], q(i, j));
    return r;
}

namespace {

// Colour refinement on the disjoint union of two quivers, so that colours
// are comparable between them. Returns colours for q1 followed by q2.
std::vector<int> joint_colours(const Quiver& q1, const Quiver& q2) {
    const int n = q1.size();
    auto entry = [&](int side, int i, int j) { return side == 0 ? q1(i, j) : q2(i, j); };
    std::vector<int> colour(2 * n, 0);
    for (int round = 0; round < 2 * n + 1; ++round) {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> sig(2 * n);
        for (int s = 0; s < 2; ++s)
            for (int i = 0; i < n; ++i) {
                std::vector<int> nb;
                for (int j = 0; j < n; ++j) {
                    int b = entry(s, i, j);
                    if (b != 0) nb.push_back(colour[s * n + j] * 64 + (b + 16));
                }
                std::sort(nb.begin(), nb.end());
                nb.insert(nb.begin(), colour[s * n + i]);
                sig[s * n + i] = std::move(nb);
            }
        for (auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        std::vector<int> fresh(2 * n);
        for (int v = 0; v < 2 * n; ++v) fresh[v] = ids[sig[v]];
        bool stable = (std::set<int>(fresh.begin(), fresh.end()).size() ==
                       std::set<int>(colour.begin(), colour.end()).size());
        colour = std::move(fresh);
        if (stable && round > 0) break;
    }
    return colour;
}

bool extend(const Quiver& q1, const Quiver& q2, const std::vector<int>& order,
            const std::vector<int>& colour, size_t pos, VertexPermutation& p,
            std::vector<char>& used) {
    const int n = q1.size();
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < n; ++w) {
        if (used[w] || colour[v] != colour[n + w]) continue;
        bool ok = true;
        for (size_t k = 0; k < pos && ok; ++k) {
            int u = order[k];
            if (q1(v, u) != q2(w, p[u])) ok = false;
        }
        if (!ok) continue;
        p[v] = w;
        used[w] = 1;
        if (extend(q1, q2, order, colour, pos + 1, p, used)) return true;
        used[w] = 0;
        p[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<VertexPermutation> find_isomorphism(const Quiver& q1, const Quiver& q2) {
    const int n = q1.size();
    if (q2.size() != n) return std::nullopt;
    std::vector<int> colour = joint_colours(q1, q2);
    {
        std::vector<int> c1(colour.begin(), colour.begin() + n), c2(colour.begin() + n, colour.end());
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        if (c1 != c2) return std::nullopt;
    }
    // Visit vertices so that each new vertex is adjacent to an earlier one
    // whenever possible: that keeps the consistency checks effective.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int start = 0; start < n; ++start) {
        if (placed[start]) continue;
        std::vector<int> queue{start};
        placed[start] = 1;
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            order.push_back(v);
            for (int w = 0; w < n; ++w)
                if (!placed[w] && q1(v, w) != 0) {
                    placed[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    VertexPermutation p(n, -1);
    std::vector<char> used(n, 0);
    if (!extend(q1, q2, order, colour, 0, p, used)) return std::nullopt;
    return p;
}

nlohmann::json to_json(const Quiver& q) {
    nlohmann::json j;
    j["n"] = q.size();
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : q.arrows()) edges.push_back({a, b});
    j["edges"] = edges;
    nlohmann::json meta = nlohmann::json::array();
    for (const auto& m : q.meta())
        meta.push_back({{"col", m.col}, {"row", m.row}, {"fill", to_string(m.fill)},
                        {"tag", to_string(m.tag)}});
    j["meta"] = meta;
    return j;
}

Quiver quiver_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    std::vector<VertexMeta> meta(n);
    if (j.contains("meta")) {
        const auto& jm = j.at("meta");
        if (static_cast<int>(jm.size()) != n) throw QuiverError("metadata size mismatch");
        for (int v = 0; v < n; ++v) {
            meta[v].col = jm[v].value("col", 0);
            meta[v].row = jm[v].value("row", 0);
            meta[v].fill = jm[v].value("fill", "bullet") == "circle" ? Fill::circle : Fill::bullet;
            meta[v].tag = tag_from_string(jm[v].value("tag", "none"));
        }
    }
    Quiver q(n, meta);
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n) throw QuiverError("edge endpoint out of range");
        q.set(a, b, q(a, b) + 1);
    }
    return q;
}

}  // namespace clab
