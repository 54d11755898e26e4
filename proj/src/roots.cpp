/**
 * \file roots.cpp
 *
 * Root systems, piecewise-linear reflections, orbits, alpha_i(u) and the
 * t-vector identities.
 */
#include "clab/roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace clab {

namespace {

int height(const RootVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

RootVector interval(int n, int i, int j) {
    if (i < 1 || j > n || i > j)
        throw RootError("interval [" + std::to_string(i) + "," + std::to_string(j) + "] outside 1.." + std::to_string(n));
    RootVector a(n, 0);
    for (int k = i; k <= j; ++k) a.at(k - 1) = 1;
    return a;
}

RootVector negate(RootVector a) {
    for (int& c : a) c = -c;
    return a;
}

// {i,j} = (alpha_i + ... + alpha_{r-1}) + (alpha_j + ... + alpha_{r+1}) on D_{r+1}
RootVector brace(int r, int i, int j) {
    if (i < 1 || j < 1 || i > r + 1 || j > r + 1)
        throw RootError("brace {" + std::to_string(i) + "," + std::to_string(j) + "} outside 1.." + std::to_string(r + 1));
    RootVector a(r + 1, 0);
    for (int k = i; k <= r - 1; ++k) ++a[k - 1];
    for (int k = j; k <= r + 1; ++k) ++a[k - 1];
    return a;
}

std::string alpha_name(int i) { return "α_" + std::to_string(i); }

}  // namespace

RootSystem RootSystem::make(char type, int n) {
    RootSystem rs;
    rs.name_ = std::string(1, type) + std::to_string(n);
    rs.n_ = n;
    rs.edges_ = dynkin_edges(type, n);
    rs.notation_ = type == 'E' ? Notation::multiset : Notation::interval;
    rs.init();
    if (type == 'A') {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                rs.names_[interval(n, i, j)] =
                    i == j ? "[" + std::to_string(i) + "]"
                           : "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    } else if (type == 'D') {
        const int r = n - 1;
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j)
                rs.names_[interval(n, i, j)] =
                    i == j ? "[" + std::to_string(i) + "]"
                           : "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        for (int i = 1; i <= r - 1; ++i)
            for (int j = i + 1; j <= r + 1; ++j)
                rs.names_[brace(r, i, j)] = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
        rs.names_[rs.simple(r + 1)] = "{" + std::to_string(r + 1) + "}";
    }
    if (rs.notation_ == Notation::interval && rs.names_.size() != rs.positive_.size())
        throw RootError("bracket names do not cover " + rs.name_);
    return rs;
}

RootSystem RootSystem::from_edges(std::string name, int n, std::vector<std::pair<int, int>> edges,
                                  Notation notation) {
    if (notation == Notation::interval) throw RootError("interval notation needs a standard A or D labelling");
    RootSystem rs;
    rs.name_ = std::move(name);
    rs.n_ = n;
    rs.edges_ = std::move(edges);
    rs.notation_ = notation;
    rs.init();
    return rs;
}

void RootSystem::init() {
    cartan_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i) cartan_[i][i] = 2;
    for (auto [a, b] : edges_) cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;
    std::set<RootVector> seen;
    std::deque<RootVector> queue;
    for (int i = 1; i <= n_; ++i) {
        seen.insert(simple(i));
        queue.push_back(simple(i));
    }
    while (!queue.empty()) {
        RootVector b = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n_; ++i) {
            RootVector c = reflect(i, b);
            if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }) && seen.insert(c).second)
                queue.push_back(c);
        }
    }
    positive_.assign(seen.begin(), seen.end());
    std::stable_sort(positive_.begin(), positive_.end(),
                     [](const RootVector& a, const RootVector& b) { return height(a) < height(b); });
    for (size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
}

RootVector RootSystem::simple(int i) const {
    if (i < 1 || i > n_) throw RootError("simple root index " + std::to_string(i) + " out of range");
    RootVector a(n_, 0);
    a[i - 1] = 1;
    return a;
}

RootVector RootSystem::neg_simple(int i) const { return negate(simple(i)); }

int RootSystem::neg_simple_index(const RootVector& a) const {
    int found = 0;
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
        if (a[k] == 0) continue;
        if (a[k] != -1 || found) return 0;
        found = k + 1;
    }
    return found;
}

RootVector RootSystem::reflect(int i, const RootVector& a) const {
    int pairing = 0;
    for (int k = 0; k < n_; ++k) pairing += a[k] * cartan_[k][i - 1];
    RootVector b = a;
    b[i - 1] -= pairing;
    return b;
}

RootVector RootSystem::sigma(int i, const RootVector& a) const {
    if (is_positive(a)) return reflect(i, a);
    const int j = neg_simple_index(a);
    if (j == 0) throw RootError(format(a) + " is not an almost positive root of " + name_);
    return j == i ? simple(i) : a;
}

std::string RootSystem::format(const RootVector& a) const {
    if (int j = neg_simple_index(a)) return "-" + alpha_name(j);
    if (!is_positive(a)) {
        std::string s = "(";
        for (size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
        return s + ")";
    }
    switch (notation_) {
        case Notation::interval: return names_.at(a);
        case Notation::multiset: {
            std::string s = "[";
            bool first = true;
            for (int k = 0; k < n_; ++k) {
                if (a[k] == 0) continue;
                s += (first ? "" : ",") + std::to_string(k + 1);
                if (a[k] > 1) s += "^" + std::to_string(a[k]);
                first = false;
            }
            return s + "]";
        }
        case Notation::sum: {
            std::string s;
            for (int k = 0; k < n_; ++k) {
                if (a[k] == 0) continue;
                if (!s.empty()) s += "+";
                if (a[k] > 1) s += std::to_string(a[k]);
                s += alpha_name(k + 1);
            }
            return s;
        }
    }
    return "?";
}

namespace {

// Drops '$', blanks and LaTeX escapes, and rewrites \alpha as 'a'.
std::string normalize_root_text(const std::string& text) {
    std::string s;
    for (size_t p = 0; p < text.size();) {
        if (text.compare(p, 6, "\\alpha") == 0) {
            s += 'a';
            p += 6;
        } else if (text.compare(p, 2, "α") == 0) {
            s += 'a';
            p += 2;
        } else if (text[p] == '$' || text[p] == '\\' || std::isspace(static_cast<unsigned char>(text[p]))) {
            ++p;
        } else {
            s += text[p++];
        }
    }
    return s;
}

std::vector<std::string> split_commas(const std::string& body) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s, const std::string& whole) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw RootError("cannot parse root '" + whole + "'");
    }
    if (used != s.size()) throw RootError("cannot parse root '" + whole + "'");
    return v;
}

}  // namespace

RootVector RootSystem::parse(const std::string& text) const {
    const std::string s = normalize_root_text(text);
    if (s.empty()) throw RootError("empty root");
    RootVector a(n_, 0);
    auto index = [&](int k) {
        if (k < 1 || k > n_) throw RootError("index " + std::to_string(k) + " out of range in '" + text + "'");
        return k - 1;
    };
    if (s.front() == '[' && s.back() == ']') {
        const auto parts = split_commas(s.substr(1, s.size() - 2));
        if (notation_ == Notation::interval) {
            if (parts.size() == 1) a[index(to_int(parts[0], text))] = 1;
            else if (parts.size() == 2) a = interval(n_, to_int(parts[0], text), to_int(parts[1], text));
            else throw RootError("cannot parse root '" + text + "'");
        } else {
            for (const auto& part : parts) {
                auto caret = part.find('^');
                if (caret == std::string::npos) a[index(to_int(part, text))] += 1;
                else a[index(to_int(part.substr(0, caret), text))] += to_int(part.substr(caret + 1), text);
            }
        }
    } else if (s.front() == '{' && s.back() == '}') {
        if (notation_ != Notation::interval || name_.front() != 'D')
            throw RootError("brace notation needs type D: '" + text + "'");
        const int r = n_ - 1;
        const auto parts = split_commas(s.substr(1, s.size() - 2));
        if (parts.size() == 1) {
            if (to_int(parts[0], text) != r + 1) throw RootError("single brace must be {r+1}: '" + text + "'");
            a = simple(r + 1);
        } else if (parts.size() == 2) {
            a = brace(r, to_int(parts[0], text), to_int(parts[1], text));
        } else {
            throw RootError("cannot parse root '" + text + "'");
        }
    } else {
        // signed sum of terms c a_k
        size_t p = 0;
        while (p < s.size()) {
            int sign = 1;
            if (s[p] == '+' || s[p] == '-') sign = s[p++] == '-' ? -1 : 1;
            size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            const int coeff = q > p ? to_int(s.substr(p, q - p), text) : 1;
            if (q >= s.size() || s[q] != 'a') throw RootError("cannot parse root '" + text + "'");
            p = q + 1;
            if (p < s.size() && s[p] == '_') ++p;
            std::string digits;
            if (p < s.size() && s[p] == '{') {
                auto close = s.find('}', p);
                if (close == std::string::npos) throw RootError("cannot parse root '" + text + "'");
                digits = s.substr(p + 1, close - p - 1);
                p = close + 1;
            } else {
                while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) digits += s[p++];
            }
            a[index(to_int(digits, text))] += sign * coeff;
        }
    }
    if (!is_almost_positive(a)) throw RootError("'" + text + "' is not an almost positive root of " + name_);
    return a;
}

RootVector sigma_apply(const RootSystem& rs, const SigmaMap& map, const RootVector& a) {
    RootVector b = a;
    for (auto it = map.word.rbegin(); it != map.word.rend(); ++it) b = rs.sigma(*it, b);
    return b;
}

RootVector sigma_power(const RootSystem& rs, const SigmaMap& map, const RootVector& a, int k) {
    RootVector b = a;
    if (k >= 0) {
        for (int s = 0; s < k; ++s) b = sigma_apply(rs, map, b);
    } else {
        SigmaMap inverse{{map.word.rbegin(), map.word.rend()}, map.name + "^-1"};
        for (int s = 0; s < -k; ++s) b = sigma_apply(rs, inverse, b);
    }
    return b;
}

namespace {

// sigma_- sigma_+ as a word: J_- factors to the left of J_+ factors
std::vector<int> bipartite_word(int n, auto&& is_plus) {
    std::vector<int> minus, plus;
    for (int i = 1; i <= n; ++i) (is_plus(i) ? plus : minus).push_back(i);
    minus.insert(minus.end(), plus.begin(), plus.end());
    return minus;
}

}  // namespace

SigmaMap sigma_C_D(int r) {
    auto pm = bipartite_word(r - 1, [r](int i) { return (r + i) % 2 == 0; });
    SigmaMap m{{}, "sigma_C(D" + std::to_string(r + 1) + ")"};
    m.word = pm;
    m.word.push_back(r + 1);
    m.word.insert(m.word.end(), pm.begin(), pm.end());
    m.word.push_back(r);
    return m;
}

SigmaMap sigma_C_A(int r) {
    return {bipartite_word(r - 1, [r](int i) { return (r + i) % 2 == 1; }), "sigma_C(A" + std::to_string(r - 1) + ")"};
}

SigmaMap sigma_F4() { return {{3, 4, 2, 6, 3, 4, 1, 5}, "sigma_F4(E6)"}; }

SigmaMap sigma_G2() { return {{3, 4, 1, 4, 2, 4}, "sigma_G2(D4)"}; }

SigmaMap sigma_A_coxeter(int r) {
    return {bipartite_word(2 * r + 1, [r](int i) { return (i - r) % 2 == 0; }),
            "coxeter(A" + std::to_string(2 * r + 1) + ")"};
}

RootSystem d4_central() { return RootSystem::from_edges("D4", 4, {{1, 4}, {4, 2}, {4, 3}}, Notation::sum); }

RootSystem core_root_system(Family f, int r) {
    switch (f) {
        case Family::C: return RootSystem::make('D', r + 1);
        case Family::F4: return RootSystem::make('E', 6);
        case Family::G2: return d4_central();
        default: break;
    }
    throw RootError("no core root system for " + to_string(f));
}

SigmaMap core_sigma(Family f, int r) {
    switch (f) {
        case Family::C: return sigma_C_D(r);
        case Family::F4: return sigma_F4();
        case Family::G2: return sigma_G2();
        default: break;
    }
    throw RootError("no sigma for " + to_string(f));
}

std::vector<RootVector> orbit_chain(const RootSystem& rs, const SigmaMap& map, const RootVector& seed) {
    std::vector<RootVector> chain{seed};
    const size_t guard = rs.positive_roots().size() + 2;
    RootVector cur = seed;
    while (true) {
        cur = sigma_apply(rs, map, cur);
        chain.push_back(cur);
        if (cur == seed || rs.neg_simple_index(cur) > 0) break;
        if (chain.size() > guard) throw RootError("orbit of " + rs.format(seed) + " under " + map.name + " does not close");
    }
    return chain;
}

std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const SigmaMap& map) {
    std::vector<Orbit> out;
    std::set<RootVector> covered;
    auto add = [&](const RootVector& seed) {
        Orbit o{seed, orbit_chain(rs, map, seed)};
        for (const auto& a : o.chain)
            if (rs.is_positive(a)) covered.insert(a);
        out.push_back(std::move(o));
    };
    for (int i = 1; i <= rs.rank(); ++i) add(rs.neg_simple(i));
    for (int i = 1; i <= rs.rank(); ++i)
        if (!covered.count(rs.simple(i))) add(rs.simple(i));
    for (const auto& a : rs.positive_roots())
        if (!covered.count(a)) add(a);
    return out;
}

CheckResult check_orbit_partition(const RootSystem& rs, const std::vector<Orbit>& orbits) {
    CheckResult res{"orbit partition " + rs.name()};
    std::map<RootVector, int> count;
    for (const auto& o : orbits) {
        // a chain from a positive seed ends with the seed again
        const size_t end = rs.is_positive(o.seed) ? o.chain.size() - 1 : o.chain.size();
        for (size_t k = 0; k < end; ++k)
            if (rs.is_positive(o.chain[k])) ++count[o.chain[k]];
    }
    for (const auto& a : rs.positive_roots())
        res.expect(count[a] == 1, [&] {
            return rs.format(a) + " appears " + std::to_string(count[a]) + " times in the orbits";
        });
    res.metrics["positive_roots"] = rs.positive_roots().size();
    res.metrics["orbits"] = orbits.size();
    return res;
}

CheckResult check_sigma_involutions(const RootSystem& rs) {
    CheckResult res{"sigma involutions " + rs.name()};
    std::vector<RootVector> almost = rs.positive_roots();
    for (int i = 1; i <= rs.rank(); ++i) almost.push_back(rs.neg_simple(i));
    for (int i = 1; i <= rs.rank(); ++i)
        for (const auto& a : almost) {
            const RootVector b = rs.sigma(i, a);
            res.expect(rs.is_almost_positive(b) && rs.sigma(i, b) == a, [&] {
                return "sigma_" + std::to_string(i) + " is not an involution at " + rs.format(a);
            });
        }
    return res;
}

CheckResult check_D_orbit_lengths(int r) {
    const RootSystem rs = RootSystem::make('D', r + 1);
    const SigmaMap sigma = sigma_C_D(r);
    CheckResult res{"D" + std::to_string(r + 1) + " orbit lengths"};
    std::map<RootVector, int> count;
    // sigma^k(seed) positive for k in [k_lo, k_hi] and sigma^k_end(seed) = end
    auto chain = [&](const RootVector& seed, int k_lo, int k_hi, int k_end, const RootVector& end) {
        RootVector cur = seed;
        for (int k = 0; k <= k_end; ++k) {
            if (k >= k_lo && k <= k_hi) {
                res.expect(rs.is_positive(cur), [&] {
                    return "sigma^" + std::to_string(k) + "(" + rs.format(seed) + ") is not positive";
                });
                ++count[cur];
            }
            if (k == k_end)
                res.expect(cur == end, [&] {
                    return "sigma^" + std::to_string(k) + "(" + rs.format(seed) + ") = " + rs.format(cur) +
                           ", expected " + rs.format(end);
                });
            cur = sigma_apply(rs, sigma, cur);
        }
    };
    auto at = [&](const RootVector& seed, int k, const RootVector& want) {
        const RootVector got = sigma_power(rs, sigma, seed, k);
        res.expect(got == want, [&] {
            return "sigma^" + std::to_string(k) + "(" + rs.format(seed) + ") = " + rs.format(got) + ", expected " +
                   rs.format(want);
        });
    };
    if (r % 2 == 0) {
        for (int i = 1; i <= r - 1; ++i) {
            chain(rs.neg_simple(i), 1, r / 2, r / 2 + 1, rs.neg_simple(i));
            chain(rs.simple(i), 0, r / 2, r / 2 + 1, rs.simple(i));
        }
        chain(rs.neg_simple(r), 1, r / 2, r / 2 + 1, rs.neg_simple(r + 1));
        chain(rs.neg_simple(r + 1), 1, r / 2 + 1, r / 2 + 2, rs.neg_simple(r));
    } else {
        for (int i = 1; i <= r - 1; ++i) {
            const bool plus = (r + i) % 2 == 0;
            chain(rs.neg_simple(i), 1, r + 1, r + 2, rs.neg_simple(i));
            at(rs.neg_simple(i), plus ? (r + 1) / 2 : (r + 3) / 2, rs.simple(i));
        }
        chain(rs.neg_simple(r), 1, (r + 1) / 2, (r + 3) / 2, rs.neg_simple(r));
        chain(rs.neg_simple(r + 1), 1, (r + 1) / 2, (r + 3) / 2, rs.neg_simple(r + 1));
    }
    for (const auto& a : rs.positive_roots())
        res.expect(count[a] == 1, [&] {
            return rs.format(a) + " occurs " + std::to_string(count[a]) + " times in the orbit lists";
        });
    return res;
}

std::optional<RootVector> alpha_of(Family f, int r, int i, int n, bool extended) {
    const CartanData cd = cartan_data(f, r);
    if (!extended && (n < -cd.t * cd.h_dual || n >= 0)) return std::nullopt;
    const RootSystem rs = core_root_system(f, r);
    const SigmaMap sigma = core_sigma(f, r);
    auto power = [&](const RootVector& seed, int k) { return sigma_power(rs, sigma, seed, k); };
    switch (f) {
        case Family::C: {
            // u = n/2; "u = c mod 2" is n = 2c mod 4
            const int c = floor_mod(n, 4);
            if (i >= 1 && i <= r - 1) {
                if ((r + i) % 2 == 0) {
                    if (c == 0) return power(rs.neg_simple(i), -n / 4);
                    if (c == 2) return power(rs.simple(i), -(n - 2) / 4);
                } else {
                    if (c == 1) return power(rs.neg_simple(i), -(n - 1) / 4);
                    if (c == 3) return power(rs.simple(i), -(n + 1) / 4);
                }
                return std::nullopt;
            }
            if (i == r && c == 0) return power(rs.neg_simple(r), -n / 4);
            if (i == r + 1 && c == 2) return power(rs.neg_simple(r + 1), -(n - 2) / 4);
            return std::nullopt;
        }
        case Family::F4: {
            const int c = floor_mod(n, 4);
            if ((i == 1 || i == 4 || i == 5) && c == 0) return power(rs.neg_simple(i), -n / 4);
            if ((i == 2 || i == 6) && c == 2) return power(rs.neg_simple(i), -(n - 2) / 4);
            if (i == 4 && c == 2) return power(rs.simple(4), -(n - 2) / 4);
            if (i == 3 && c == 1) return power(rs.neg_simple(3), -(n - 1) / 4);
            if (i == 3 && c == 3) return power(rs.simple(3), -(n + 1) / 4);
            return std::nullopt;
        }
        case Family::G2: {
            // u = n/3
            const int c = floor_mod(n, 6);
            if (i == 1 && c == 3) return power(rs.neg_simple(1), -(n - 3) / 6);
            if (i == 2 && c == 1) return power(rs.neg_simple(2), -(n - 1) / 6);
            if (i == 3 && c == 5) return power(rs.neg_simple(3), -(n - 5) / 6);
            if (i == 4 && c == 4) return power(rs.parse("α_3+α_4"), -(n + 2) / 6);
            if (i == 4 && c == 2) return power(rs.simple(1), -(n + 4) / 6);
            if (i == 4 && c == 0) return power(rs.neg_simple(4), -n / 6);
            return std::nullopt;
        }
        default: break;
    }
    throw RootError("alpha_i(u) is defined for C, F4 and G2 only");
}

std::optional<RootVector> orbit_table_entry(int r, int row, int n) {
    if (row < 1 || row > r) throw RootError("orbit table row " + std::to_string(row) + " out of range");
    if (row < r) return alpha_of(Family::C, r, row, n, true);
    return alpha_of(Family::C, r, floor_mod(n, 4) == 0 ? r : r + 1, n, true);
}

CheckResult check_alpha_recurrence(int r) {
    CheckResult res{"alpha recurrences C" + std::to_string(r)};
    const RootSystem rs = RootSystem::make('D', r + 1);
    const RootVector zero(r + 1, 0);
    auto alpha = [&](int i, int n) -> std::optional<RootVector> {
        if (i == 0) return zero;
        return alpha_of(Family::C, r, i, n);
    };
    auto add = [](RootVector a, const RootVector& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    };
    // lhs_i, lhs_n +/- step against the two right-hand terms at rhs_n
    auto relation = [&](const std::string& label, int i, int n, int step, int j1, int j2, int m1, int m2) {
        auto a = alpha(i, n - step), b = alpha(i, n + step), c = alpha(j1, m1), d = alpha(j2, m2);
        if (!a || !b || !c || !d) return;
        res.expect(add(*a, *b) == add(*c, *d), [&] {
            return label + " fails at i=" + std::to_string(i) + ", u=" + format_time(n, 2);
        });
    };
    const int lo = -2 * (r + 1);
    for (int n = lo; n < 0; ++n) {
        for (int i = 1; i <= r - 2; ++i) relation("inner recurrence", i, n, 1, i - 1, i + 1, n, n);
        if (floor_mod(n, 2) == 0) {
            const bool even_u = floor_mod(n, 4) == 0;
            relation("recurrence at r-1", r - 1, n, 1, r - 2, even_u ? r : r + 1, n, n);
            // alpha_r(u-1) + alpha_r(u+1) (u odd), alpha_{r+1}(u-1) + alpha_{r+1}(u+1) (u even)
            const int fork = even_u ? r + 1 : r;
            auto a = alpha(fork, n - 2), b = alpha(fork, n + 2), c = alpha(r - 1, n - 1), d = alpha(r - 1, n + 1);
            if (a && b && c && d)
                res.expect(add(*a, *b) == add(*c, *d), [&] {
                    return "fork recurrence fails at i=" + std::to_string(fork) + ", u=" + format_time(n, 2);
                });
        }
    }
    if (res.checked == 0) res.fail("no recurrence could be evaluated");
    return res;
}

namespace {

struct DBracket {
    bool is_brace = false;
    int i = 0, j = 0;  // {r+1} is stored as brace (r+1, 0)
};

std::map<RootVector, DBracket> d_brackets(int r) {
    std::map<RootVector, DBracket> m;
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) m[interval(r + 1, i, j)] = {false, i, j};
    for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 1; j <= r + 1; ++j) m[brace(r, i, j)] = {true, i, j};
    RootVector last(r + 1, 0);
    last[r] = 1;
    m[last] = {true, r + 1, 0};
    return m;
}

}  // namespace

RootVector rho(const RootSystem& d, const RootSystem& a, const RootVector& beta) {
    const int r = d.rank() - 1;
    if (a.rank() != 2 * r + 1) throw RootError("rho needs A_{2r+1} for D_{r+1}");
    const auto table = d_brackets(r);
    auto it = table.find(beta);
    if (it == table.end()) throw RootError(d.format(beta) + " is not a positive root of " + d.name());
    const auto [is_brace, i, j] = it->second;
    const int n = 2 * r + 1;
    if (is_brace && j == 0) return interval(n, r, r + 1);
    const bool odd = floor_mod(j - r, 2) == 1;
    if (!is_brace) return odd ? interval(n, i, j) : interval(n, 2 * r + 2 - j, 2 * r + 2 - i);
    return odd ? interval(n, i, 2 * r + 2 - j) : interval(n, j, 2 * r + 2 - i);
}

CheckResult check_rho(int r) {
    CheckResult res{"rho D" + std::to_string(r + 1) + " -> A" + std::to_string(2 * r + 1)};
    const RootSystem d = RootSystem::make('D', r + 1);
    const RootSystem a = RootSystem::make('A', 2 * r + 1);
    const SigmaMap sigma = sigma_C_D(r);
    const SigmaMap coxeter = sigma_A_coxeter(r);
    std::set<RootVector> orbits;
    for (int i = 1; i <= r; ++i) {
        RootVector cur = a.neg_simple(i);
        for (int k = 1; k <= r + 1; ++k) {
            cur = sigma_apply(a, coxeter, cur);
            res.expect(a.is_positive(cur), [&] {
                return "orbit O'_" + std::to_string(i) + " leaves the positive roots at k=" + std::to_string(k);
            });
            orbits.insert(cur);
        }
    }
    std::set<RootVector> image;
    for (const auto& beta : d.positive_roots()) {
        const RootVector img = rho(d, a, beta);
        res.expect(image.insert(img).second, [&] { return "rho is not injective at " + d.format(beta); });
        res.expect(orbits.count(img) > 0, [&] {
            return "rho(" + d.format(beta) + ") = " + a.format(img) + " lies outside the orbits O'_i";
        });
    }
    res.expect(image.size() == orbits.size(), [&] {
        return "image has " + std::to_string(image.size()) + " roots, the orbits " + std::to_string(orbits.size());
    });
    // s' = s'_- s'_+ acts linearly. The identity is compared on the pairs
    // where both sigma(beta) and (s')^2 rho(beta) are positive; the pairs where
    // (s')^2 leaves Phi'_+ (r-1 of them) are counted apart.
    auto coxeter_linear = [&](RootVector x) {
        for (auto it = coxeter.word.rbegin(); it != coxeter.word.rend(); ++it) x = a.reflect(*it, x);
        return x;
    };
    long compared = 0, leaving = 0;
    for (const auto& beta : d.positive_roots()) {
        const RootVector next = sigma_apply(d, sigma, beta);
        if (!d.is_positive(next)) continue;
        const RootVector lhs = rho(d, a, next), rhs = coxeter_linear(coxeter_linear(rho(d, a, beta)));
        if (!a.is_positive(rhs)) {
            ++leaving;
            continue;
        }
        ++compared;
        res.expect(lhs == rhs, [&] {
            return "rho(sigma(" + d.format(beta) + ")) = " + a.format(lhs) + " but (s')^2 rho gives " + a.format(rhs);
        });
    }
    res.metrics["conjugation_pairs"] = compared;
    res.metrics["pairs_leaving_positive"] = leaving;
    return res;
}

namespace {

RootVector project(const TropMonomial& m, const std::vector<int>& coords) {
    RootVector a;
    for (int v : coords) a.push_back(m.at(v));
    return a;
}

std::string vertex_name(const VertexMeta& m) {
    return "(" + std::to_string(m.col) + "," + std::to_string(m.row) + ")";
}

// [i,j] over alpha_1..alpha_n, zero when i > j
RootVector segment(int n, int i, int j) {
    if (i > j) return RootVector(n, 0);
    if (i < 1 || j > n) throw RootError("segment [" + std::to_string(i) + "," + std::to_string(j) + "] out of range");
    return interval(n, i, j);
}

// t_i(u) = -alpha_i(u) for every core vertex, and no p_+ point outside the case table
void check_core(CheckResult& res, const TropicalRun& run, const std::vector<int>& coords, const RootSystem& rs) {
    const Schedule& s = run.schedule();
    const FamilySpec& spec = s.spec();
    const int t = s.t();
    for (int n = -t * s.cartan().h_dual; n < 0; ++n)
        for (int i = 1; i <= static_cast<int>(coords.size()); ++i) {
            const int v = coords[i - 1];
            const auto alpha = alpha_of(spec.family, spec.rank, i, n);
            const bool mutated = s.is_p_plus(v, n);
            if (!alpha) {
                res.expect(!mutated, [&] {
                    return "vertex " + vertex_name(s.initial().meta()[v]) + " is mutated at u=" + format_time(n, t) +
                           " outside the case table";
                });
                continue;
            }
            res.expect(mutated, [&] {
                return "alpha_" + std::to_string(i) + "(" + format_time(n, t) + ") is not at a mutation point";
            });
            const RootVector got = project(run.y(v, n), coords);
            res.expect(got == negate(*alpha), [&] {
                return "t_" + std::to_string(i) + "(" + format_time(n, t) + ") = " + rs.format(negate(got)) +
                       " negated, expected -" + rs.format(*alpha);
            });
        }
}

void check_C_A_part(CheckResult& res, const TropicalRun& run) {
    const Schedule& s = run.schedule();
    const Quiver& q = s.initial();
    const int r = s.spec().rank, hd = s.cartan().h_dual;
    const RootSystem a = RootSystem::make('A', r - 1);
    const SigmaMap sigma = sigma_C_A(r);
    std::vector<int> coords;
    for (int k = 1; k <= r - 1; ++k) coords.push_back(q.at(k, 1));
    // -h^vee/2 <= u  <=>  n >= -h^vee
    auto upper_half = [&](int n) { return n >= -hd; };
    for (int n = -2 * hd; n < 0; ++n)
        for (int v = 0; v < q.size(); ++v) {
            if (!s.is_p_plus(v, n)) continue;
            const VertexMeta& m = q.meta()[v];
            std::optional<RootVector> want;
            if (m.col <= r - 1 && m.row == 1) {
                const int i = m.col;
                const bool plus = (r + i) % 2 == 1;
                if (plus && n % 2 == 0) want = negate(sigma_power(a, sigma, a.neg_simple(i), -n / 2));
                if (!plus && n % 2 != 0) want = negate(sigma_power(a, sigma, a.neg_simple(i), -(n - 1) / 2));
            } else if (m.col <= r - 1 && m.row == 2) {
                const int i = m.col;
                want = negate(upper_half(n) ? segment(r - 1, 2 * r + 2 - i + n, r - 1)
                                            : segment(r - 1, -1 - i - n, r - 1));
            } else if (m.col <= r - 1 && m.row == 3) {
                want = RootVector(r - 1, 0);
            } else {
                want = negate(upper_half(n) ? segment(r - 1, r + 2 + n, r - 1) : segment(r - 1, -1 - r - n, r - 1));
            }
            if (!want) {
                res.fail("no A-part formula for " + vertex_name(m) + " at u=" + format_time(n, 2));
                continue;
            }
            const RootVector got = project(run.y(v, n), coords);
            res.expect(got == *want, [&] {
                return "A part of " + vertex_name(m) + " at u=" + format_time(n, 2) + " is " + a.format(got) +
                       ", expected " + a.format(*want);
            });
            // the only positive A-part monomials: t_{i1} = alpha_{r-i} at u = -h^vee/2, -h^vee/2 - 1/2
            const bool exceptional = m.col <= r - 1 && m.row == 1 && (n == -hd || n == -hd - 1);
            const bool positive = sign_of(got) == Sign::positive;
            res.expect(positive == exceptional && (!exceptional || got == a.simple(r - m.col)), [&] {
                return "unexpected A-part sign of " + vertex_name(m) + " at u=" + format_time(n, 2);
            });
        }
}

// pi_D(y_{i1}(u)) = pi_D(y_{i3}(u)) = 1 when r + i + 2u is even
void check_C_zero_cases(CheckResult& res, const TropicalRun& run, const std::vector<int>& coords) {
    const Schedule& s = run.schedule();
    const Quiver& q = s.initial();
    const int r = s.spec().rank, hd = s.cartan().h_dual;
    for (int n = -2 * hd; n < 0; ++n)
        for (int i = 1; i <= r - 1; ++i) {
            if (floor_mod(r + i + n, 2) != 0) continue;
            for (int row : {1, 3}) {
                const int v = q.at(i, row);
                const RootVector got = project(run.y(v, n), coords);
                res.expect(std::all_of(got.begin(), got.end(), [](int x) { return x == 0; }), [&] {
                    return "D part of " + vertex_name(q.meta()[v]) + " at u=" + format_time(n, 2) + " is not 1";
                });
            }
        }
}

}  // namespace

CheckResult check_tvectors(const TropicalRun& run) {
    const Schedule& s = run.schedule();
    const FamilySpec& spec = s.spec();
    if (spec.level != 2) throw RootError("t-vector identities are stated at level 2");
    if (!run.has(-s.t() * s.cartan().h_dual) || !run.has(0))
        throw RootError("tropical run does not cover -h^vee <= u < 0");
    const Quiver& q = s.initial();
    CheckResult res{"t-vectors " + spec.id()};
    const int r = spec.rank;
    const RootSystem rs = core_root_system(spec.family, r);
    std::vector<int> coords;
    switch (spec.family) {
        case Family::C: {
            for (int k = 1; k <= r - 1; ++k) coords.push_back(q.at(k, 2));
            coords.push_back(q.at(r, 1));
            coords.push_back(q.at(r + 1, 1));
            CheckResult d{"D part"}, zero{"D part zero cases"}, apart{"A part"};
            check_core(d, run, coords, rs);
            check_C_zero_cases(zero, run, coords);
            check_C_A_part(apart, run);
            for (const auto* c : {&d, &zero, &apart}) {
                res.metrics[c->name] = c->checked;
                res.merge(*c);
            }
            return res;
        }
        case Family::F4:
            for (int k = 1; k <= 6; ++k) coords.push_back(q.at(k, (k == 3 || k == 4) ? 2 : 1));
            break;
        case Family::G2:
            for (int k = 1; k <= 3; ++k) coords.push_back(q.at(k, 1));
            coords.push_back(q.at(4, 3));
            break;
        default:
            throw RootError("t-vectors are defined for C, F4 and G2 only");
    }
    check_core(res, run, coords, rs);
    return res;
}

CheckResult check_orbit_table_fixture(const nlohmann::json& table) {
    const int r = table.at("r").get<int>();
    const RootSystem rs = RootSystem::make('D', r + 1);
    CheckResult res{"D" + std::to_string(r + 1) + " orbit table"};
    std::set<std::pair<int, int>> seen;
    std::map<int, std::pair<int, int>> span;  // row -> printed time range
    for (const auto& e : table.at("entries")) {
        const int row = e.at("row").get<int>();
        const std::string u = e.at("u").get<std::string>();
        const std::string text = e.at("text").get<std::string>();
        const int n = parse_time(u, 2);
        seen.insert({row, n});
        auto [it, fresh] = span.try_emplace(row, n, n);
        if (!fresh) it->second = {std::min(it->second.first, n), std::max(it->second.second, n)};
        std::optional<RootVector> want;
        try {
            want = rs.parse(text);
        } catch (const RootError& err) {
            res.fail("row " + std::to_string(row) + ", u=" + u + ": cannot read '" + text + "': " + err.what());
            continue;
        }
        const auto got = orbit_table_entry(r, row, n);
        res.expect(got && *got == *want, [&] {
            return "row " + std::to_string(row) + ", u=" + u + ": table has " + rs.format(*want) + ", computed " +
                   (got ? rs.format(*got) : std::string("nothing"));
        });
    }
    // every computed cell within a row's printed time range appears in the table
    long cells = 0;
    res.expect(static_cast<int>(span.size()) == r, [&] { return "table does not have " + std::to_string(r) + " rows"; });
    for (const auto& [row, range] : span)
        for (int n = range.first; n <= range.second; ++n) {
            if (!orbit_table_entry(r, row, n)) continue;
            ++cells;
            res.expect(seen.count({row, n}) > 0, [&] {
                return "row " + std::to_string(row) + ", u=" + format_time(n, 2) + " missing from the table";
            });
        }
    res.metrics["entries"] = table.at("entries").size();
    res.metrics["cells"] = cells;
    return res;
}

CheckResult check_orbit_list_fixture(const RootSystem& rs, const SigmaMap& map, const nlohmann::json& chains) {
    CheckResult res{rs.name() + " orbit list"};
    std::vector<std::vector<RootVector>> computed;
    for (const auto& o : orbit_decomposition(rs, map)) computed.push_back(o.chain);
    std::vector<std::vector<RootVector>> listed;
    for (const auto& c : chains) {
        std::vector<RootVector> chain;
        for (const auto& tok : c) chain.push_back(rs.parse(tok.get<std::string>()));
        listed.push_back(std::move(chain));
    }
    res.expect(computed.size() == listed.size(), [&] {
        return "computed " + std::to_string(computed.size()) + " orbits, listed " + std::to_string(listed.size());
    });
    for (const auto& chain : listed) {
        const bool found = std::find(computed.begin(), computed.end(), chain) != computed.end();
        res.expect(found, [&] {
            std::string line;
            for (const auto& a : chain) line += (line.empty() ? "" : " -> ") + rs.format(a);
            const auto seeded = orbit_chain(rs, map, chain.front());
            std::string got;
            for (const auto& a : seeded) got += (got.empty() ? "" : " -> ") + rs.format(a);
            return "listed orbit " + line + " differs from the computed " + got;
        });
    }
    res.metrics["orbits"] = listed.size();
    return res;
}

std::vector<std::string> orbit_table_lines(const RootSystem& rs, const SigmaMap& map) {
    std::vector<std::string> lines;
    for (const auto& o : orbit_decomposition(rs, map)) {
        std::string line;
        for (const auto& a : o.chain) line += (line.empty() ? "" : " -> ") + rs.format(a);
        lines.push_back(line);
    }
    return lines;
}

}  // namespace clab
