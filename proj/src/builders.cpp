/**
 * \file builders.cpp
 *
 * Generative transcriptions of the quivers Q_l(C_r), Q_l(F_4), Q_l(G_2).
 *
 * Each family has a "bullet" part, a grid of columns with the bipartite
 * square orientation, and a "circle" part of shorter columns attached to the
 * middle bullet column. Rows are counted from the bottom.
 */
#include "clab/builders.hpp"

#include <sstream>
#include <stdexcept>

namespace clab {

std::string to_string(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
        case Family::SquareA: return "A";
        case Family::SquareD: return "D";
        case Family::SquareE6: return "E6";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "C") return Family::C;
    if (s == "F4" || s == "F") return Family::F4;
    if (s == "G2" || s == "G") return Family::G2;
    if (s == "A") return Family::SquareA;
    if (s == "D") return Family::SquareD;
    if (s == "E6" || s == "E") return Family::SquareE6;
    throw std::invalid_argument("unknown family '" + s + "'");
}

std::string FamilySpec::id() const {
    std::ostringstream os;
    switch (family) {
        case Family::C: os << "C" << rank; break;
        case Family::F4: os << "F4"; break;
        case Family::G2: os << "G2"; break;
        case Family::SquareA: os << "A" << rank << "xA"; break;
        case Family::SquareD: os << "D" << rank << "xA"; break;
        case Family::SquareE6: os << "E6xA"; break;
    }
    os << "_l" << level;
    return os.str();
}

void validate(const FamilySpec& spec) {
    if (spec.level < 2) throw std::invalid_argument("level must be at least 2");
    switch (spec.family) {
        case Family::C:
            if (spec.rank < 2) throw std::invalid_argument("C_r needs r >= 2");
            break;
        case Family::F4:
            if (spec.rank != 4) throw std::invalid_argument("F4 has rank 4");
            break;
        case Family::G2:
            if (spec.rank != 2) throw std::invalid_argument("G2 has rank 2");
            break;
        case Family::SquareA:
            if (spec.rank < 1) throw std::invalid_argument("A_r needs r >= 1");
            break;
        case Family::SquareD:
            if (spec.rank < 4) throw std::invalid_argument("D_r needs r >= 4");
            break;
        case Family::SquareE6:
            if (spec.rank != 6) throw std::invalid_argument("E6 has rank 6");
            break;
    }
}

FamilySpec parse_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("spec must look like C:3:2, G2:3 or D:4:3");
    FamilySpec spec;
    spec.family = family_from_string(parts[0]);
    if (parts.size() == 3) {
        spec.rank = std::stoi(parts[1]);
        spec.level = std::stoi(parts[2]);
    } else {
        spec.level = std::stoi(parts[1]);
        if (spec.family == Family::F4) spec.rank = 4;
        else if (spec.family == Family::G2) spec.rank = 2;
        else if (spec.family == Family::SquareE6) spec.rank = 6;
        else throw std::invalid_argument("rank missing in spec '" + text + "'");
    }
    validate(spec);
    return spec;
}

int CartanData::sum_ta() const {
    int s = 0;
    for (int v : t_a) s += v;
    return s;
}

CartanData cartan_data(Family family, int rank) {
    CartanData cd;
    switch (family) {
        case Family::C:
            if (rank < 2) throw std::invalid_argument("C_r needs r >= 2");
            cd.h = 2 * rank;
            cd.h_dual = rank + 1;
            cd.t = 2;
            cd.t_a.assign(rank, 2);
            cd.t_a[rank - 1] = 1;  // alpha_r is the long root
            break;
        case Family::F4:
            cd.h = 12;
            cd.h_dual = 9;
            cd.t = 2;
            cd.t_a = {1, 1, 2, 2};
            break;
        case Family::G2:
            cd.h = 6;
            cd.h_dual = 4;
            cd.t = 3;
            cd.t_a = {1, 3};
            break;
        default:
            throw std::invalid_argument("cartan data is defined for C, F4 and G2 only");
    }
    return cd;
}

CartanData cartan_data(const FamilySpec& spec) { return cartan_data(spec.family, spec.rank); }

std::vector<std::pair<int, int>> dynkin_edges(char type, int n) {
    std::vector<std::pair<int, int>> e;
    switch (type) {
        case 'A':
            for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
            for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(n - 2, n);
            break;
        case 'E':
            if (n != 6) throw std::invalid_argument("only E6 is supported");
            // chain 1-2-3-5-6 with 4 attached to 3
            e = {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {3, 4}};
            break;
        default:
            throw std::invalid_argument(std::string("unknown Dynkin type ") + type);
    }
    return e;
}

namespace {

Tag sign_tag(bool plus) { return plus ? Tag::plus : Tag::minus; }

struct Builder {
    std::vector<VertexMeta> meta;
    std::vector<std::pair<int, int>> arrows;  // as (col,row) pairs resolved later
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pending;

    void vertex(int col, int row, Fill f, Tag t) { meta.push_back({col, row, f, t}); }
    void arrow(int c1, int r1, int c2, int r2) { pending.push_back({{c1, r1}, {c2, r2}}); }

    Quiver finish() {
        Quiver q(static_cast<int>(meta.size()), meta);
        for (auto& [from, to] : pending) {
            int a = q.find(from.first, from.second), b = q.find(to.first, to.second);
            if (a < 0 || b < 0) continue;  // arrows to rows outside the range are dropped
            q.add_arrow(a, b);
        }
        return q;
    }
};

// Bullet grid: columns cols[0..], cols[c] has "c" equal to its distance from
// the middle column; rows 1..rows. Horizontal arrows leave the vertex with
// c+i' even, vertical arrows leave the vertex with c+i' odd, and the vertex is
// tagged + when c+i' is odd.
void bullet_grid(Builder& b, const std::vector<int>& cols_by_distance, int rows) {
    for (size_t c = 0; c < cols_by_distance.size(); ++c)
        for (int ip = 1; ip <= rows; ++ip)
            b.vertex(cols_by_distance[c], ip, Fill::bullet, sign_tag((c + ip) % 2 == 1));
    for (size_t c = 0; c < cols_by_distance.size(); ++c) {
        int col = cols_by_distance[c];
        for (int ip = 1; ip <= rows; ++ip) {
            bool even = (c + ip) % 2 == 0;
            if (c + 1 < cols_by_distance.size()) {
                int other = cols_by_distance[c + 1];
                if (even) b.arrow(col, ip, other, ip);
                else b.arrow(other, ip, col, ip);
            }
            if (ip < rows) {
                if (!even) b.arrow(col, ip, col, ip + 1);
                else b.arrow(col, ip + 1, col, ip);
            }
        }
    }
}

// Circle column attached to the middle bullet column `mid`, rows 1..l-1.
// The middle row 2k always points to circle k. "odd_hub" selects whether the
// odd-k circles (true) or even-k circles (false) point back to rows 2k+-1 and
// are the targets of the vertical arrows.
void circle_column(Builder& b, int col, int mid, int l, bool odd_hub) {
    for (int k = 1; k <= l - 1; ++k) {
        bool hub = (k % 2 == 1) == odd_hub;
        b.vertex(col, k, Fill::circle, sign_tag(!hub));
    }
    for (int k = 1; k <= l - 1; ++k) {
        bool hub = (k % 2 == 1) == odd_hub;
        b.arrow(mid, 2 * k, col, k);
        if (hub) {
            b.arrow(col, k, mid, 2 * k - 1);
            b.arrow(col, k, mid, 2 * k + 1);
        }
        if (k + 1 <= l - 1) {
            // vertical arrows point into the hub circles
            if (hub) b.arrow(col, k + 1, col, k);
            else b.arrow(col, k, col, k + 1);
        }
    }
}

Quiver build_C(int r, int l) {
    Builder b;
    std::vector<int> cols;  // distance 0 is column r-1
    for (int i = r - 1; i >= 1; --i) cols.push_back(i);
    bullet_grid(b, cols, 2 * l - 1);
    // Column r: odd circles are +, even circles point back to the middle.
    circle_column(b, r, r - 1, l, /*odd_hub=*/false);
    // Column r+1: even circles are +, odd circles point back to the middle.
    circle_column(b, r + 1, r - 1, l, /*odd_hub=*/true);
    return b.finish();
}

Quiver build_F4(int l) {
    Builder b;
    bullet_grid(b, {3, 4}, 2 * l - 1);
    circle_column(b, 2, 3, l, /*odd_hub=*/true);
    circle_column(b, 5, 3, l, /*odd_hub=*/false);
    // Outer circle columns 1 and 6, attached horizontally to 2 and 5.
    for (int k = 1; k <= l - 1; ++k) {
        b.vertex(1, k, Fill::circle, sign_tag(k % 2 == 1));
        b.vertex(6, k, Fill::circle, sign_tag(k % 2 == 0));
    }
    for (int k = 1; k <= l - 1; ++k) {
        if (k % 2 == 1) {
            b.arrow(2, k, 1, k);
            b.arrow(6, k, 5, k);
        } else {
            b.arrow(1, k, 2, k);
            b.arrow(5, k, 6, k);
        }
        if (k + 1 <= l - 1) {
            if (k % 2 == 1) {
                b.arrow(1, k, 1, k + 1);
                b.arrow(6, k + 1, 6, k);
            } else {
                b.arrow(1, k + 1, 1, k);
                b.arrow(6, k, 6, k + 1);
            }
        }
    }
    return b.finish();
}

Quiver build_G2(int l) {
    Builder b;
    const int rows = 3 * l - 1;
    for (int j = 1; j <= rows; ++j) b.vertex(4, j, Fill::bullet, sign_tag(j % 2 == 1));
    for (int j = 1; j < rows; ++j) {
        if (j % 2 == 1) b.arrow(4, j, 4, j + 1);
        else b.arrow(4, j + 1, 4, j);
    }
    static const Tag odd_tags[3] = {Tag::IV, Tag::II, Tag::VI};
    static const Tag even_tags[3] = {Tag::I, Tag::V, Tag::III};
    for (int col = 1; col <= 3; ++col)
        for (int k = 1; k <= l - 1; ++k)
            b.vertex(col, k, Fill::circle, k % 2 == 1 ? odd_tags[col - 1] : even_tags[col - 1]);

    auto out = [&](int col, int k, int j) { b.arrow(col, k, 4, j); };
    auto in = [&](int col, int k, int j) { b.arrow(4, j, col, k); };
    for (int k = 1; k <= l - 1; ++k) {
        const int j = 3 * k;
        const bool odd = k % 2 == 1;
        // column 1
        if (odd) {
            out(1, k, j - 2); in(1, k, j - 1); out(1, k, j); in(1, k, j + 1); out(1, k, j + 2);
        } else {
            in(1, k, j);
        }
        // column 2
        if (odd) {
            in(2, k, j - 1); out(2, k, j); in(2, k, j + 1);
        } else {
            out(2, k, j - 1); in(2, k, j); out(2, k, j + 1);
        }
        // column 3
        if (odd) {
            out(3, k, j);
        } else {
            in(3, k, j - 2); out(3, k, j - 1); in(3, k, j); out(3, k, j + 1); in(3, k, j + 2);
        }
        if (k + 1 <= l - 1) {
            // vertical arrows: columns 1 and 3 from even k, column 2 from odd k
            if (odd) {
                b.arrow(1, k + 1, 1, k);
                b.arrow(2, k, 2, k + 1);
                b.arrow(3, k + 1, 3, k);
            } else {
                b.arrow(1, k, 1, k + 1);
                b.arrow(2, k + 1, 2, k);
                b.arrow(3, k, 3, k + 1);
            }
        }
    }
    return b.finish();
}

Quiver build_square(char type, int rank, int l) {
    auto edges = dynkin_edges(type, rank);
    // bipartite colouring of the Dynkin diagram, node 1 positive
    std::vector<int> eps(rank + 1, 0);
    eps[1] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : edges) {
            if (eps[a] != 0 && eps[b] == 0) { eps[b] = -eps[a]; changed = true; }
            if (eps[b] != 0 && eps[a] == 0) { eps[a] = -eps[b]; changed = true; }
        }
    }
    auto sign = [&](int i, int j) { return eps[i] * ((j % 2 == 0) ? 1 : -1); };
    Builder b;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= l - 1; ++j) b.vertex(i, j, Fill::bullet, sign_tag(sign(i, j) > 0));
    for (int j = 1; j <= l - 1; ++j)
        for (auto [p, q] : edges) {
            if (sign(p, j) > 0) b.arrow(p, j, q, j);
            else b.arrow(q, j, p, j);
        }
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j + 1 <= l - 1; ++j) {
            if (sign(i, j) < 0) b.arrow(i, j, i, j + 1);
            else b.arrow(i, j + 1, i, j);
        }
    return b.finish();
}

VertexPermutation perm_from(const Quiver& q, auto&& image) {
    VertexPermutation p(q.size());
    for (int v = 0; v < q.size(); ++v) {
        auto [c, r] = image(q.meta()[v].col, q.meta()[v].row);
        p[v] = q.at(c, r);
    }
    if (!is_permutation(p)) throw QuiverError("involution is not a bijection");
    return p;
}

}  // namespace

Quiver build(const FamilySpec& spec) {
    validate(spec);
    Quiver q;
    switch (spec.family) {
        case Family::C: q = build_C(spec.rank, spec.level); break;
        case Family::F4: q = build_F4(spec.level); break;
        case Family::G2: q = build_G2(spec.level); break;
        case Family::SquareA: q = build_square('A', spec.rank, spec.level); break;
        case Family::SquareD: q = build_square('D', spec.rank, spec.level); break;
        case Family::SquareE6: q = build_square('E', 6, spec.level); break;
    }
    if (!q.is_simple_skew()) throw QuiverError("constructed quiver has multiple arrows");
    if (q.size() != expected_vertex_count(spec))
        throw QuiverError("constructed quiver has an unexpected number of vertices");
    return q;
}

int expected_vertex_count(const FamilySpec& spec) {
    const int r = spec.rank, l = spec.level;
    switch (spec.family) {
        case Family::C: return (r - 1) * (2 * l - 1) + 2 * (l - 1);
        case Family::F4: return 2 * (2 * l - 1) + 4 * (l - 1);
        case Family::G2: return (3 * l - 1) + 3 * (l - 1);
        case Family::SquareA:
        case Family::SquareD: return r * (l - 1);
        case Family::SquareE6: return 6 * (l - 1);
    }
    return 0;
}

VertexPermutation nu_permutation(const Quiver& q, std::array<int, 3> s) {
    return perm_from(q, [&](int c, int r) {
        return c <= 3 ? std::pair{s[c - 1], r} : std::pair{c, r};
    });
}

Involutions involutions(const FamilySpec& spec) {
    validate(spec);
    const Quiver q = build(spec);
    const int r = spec.rank, l = spec.level;
    Involutions inv;
    switch (spec.family) {
        case Family::C:
            inv.r = perm_from(q, [&](int c, int row) {
                if (c == r) return std::pair{r + 1, row};
                if (c == r + 1) return std::pair{r, row};
                return std::pair{c, row};
            });
            inv.omega = perm_from(q, [&](int c, int row) {
                if (c <= r - 1) return std::pair{c, 2 * l - row};
                if (r % 2 == 0) return std::pair{c == r ? r + 1 : r, l - row};
                return std::pair{c, l - row};
            });
            break;
        case Family::F4:
            inv.r = perm_from(q, [&](int c, int row) {
                if (c == 3 || c == 4) return std::pair{c, row};
                return std::pair{7 - c, row};
            });
            inv.omega = perm_from(q, [&](int c, int row) {
                if (c == 3 || c == 4) return std::pair{c, 2 * l - row};
                return std::pair{7 - c, l - row};
            });
            break;
        case Family::G2: {
            inv.omega = perm_from(q, [&](int c, int row) {
                if (c == 4) return std::pair{4, 3 * l - row};
                return std::pair{c, l - row};
            });
            const std::array<std::array<int, 3>, 6> all = {
                {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}, {2, 3, 1}, {3, 1, 2}}};
            for (const auto& s : all) {
                std::string key = std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]);
                inv.nu[key] = nu_permutation(q, s);
            }
            break;
        }
        default:
            // The square products carry the plain row reflection j -> l-j.
            inv.omega = perm_from(q, [&](int c, int row) { return std::pair{c, l - row}; });
            break;
    }
    return inv;
}

}  // namespace clab
