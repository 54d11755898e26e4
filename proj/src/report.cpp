/**
 * \file report.cpp
 *
 * Suite configuration, job dispatch and report rows.
 */
#include "clab/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include "clab/dilog.hpp"
#include "clab/numeric.hpp"
#include "clab/properties.hpp"
#include "clab/roots.hpp"
#include "clab/schedule.hpp"
#include "clab/tropical.hpp"

#ifndef CLAB_FIXTURES_DIR
#define CLAB_FIXTURES_DIR "tests/fixtures"
#endif

namespace clab {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(NegativeControl c) {
    switch (c) {
        case NegativeControl::none: return "none";
        case NegativeControl::global_flip: return "global_flip";
        case NegativeControl::mixed_flip: return "mixed_flip";
    }
    return "?";
}

NegativeControl negative_control_from_string(const std::string& s) {
    if (s == "none") return NegativeControl::none;
    if (s == "global_flip") return NegativeControl::global_flip;
    if (s == "mixed_flip") return NegativeControl::mixed_flip;
    throw std::invalid_argument("unknown negative control '" + s + "'");
}

nlohmann::json to_json(const ReportRow& row) {
    return {{"case", row.case_id},     {"check", row.check},     {"status", to_string(row.status)},
            {"statement", row.statement}, {"metrics", row.metrics}, {"seconds", row.seconds},
            {"messages", row.messages}};
}

std::string default_fixtures_dir() { return CLAB_FIXTURES_DIR; }

namespace {

std::string spec_string(const FamilySpec& s) {
    switch (s.family) {
        case Family::C: return "C:" + std::to_string(s.rank) + ":" + std::to_string(s.level);
        case Family::F4: return "F4:" + std::to_string(s.level);
        case Family::G2: return "G2:" + std::to_string(s.level);
        case Family::SquareA: return "A:" + std::to_string(s.rank) + ":" + std::to_string(s.level);
        case Family::SquareD: return "D:" + std::to_string(s.rank) + ":" + std::to_string(s.level);
        case Family::SquareE6: return "E6:" + std::to_string(s.level);
    }
    return "?";
}

std::vector<FamilySpec> specs_from_json(const nlohmann::json& j) {
    std::vector<FamilySpec> out;
    for (const auto& item : j) out.push_back(parse_spec(item.get<std::string>()));
    return out;
}

nlohmann::json specs_to_json(const std::vector<FamilySpec>& specs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : specs) j.push_back(spec_string(s));
    return j;
}

}  // namespace

SuiteConfig SuiteConfig::acceptance() {
    SuiteConfig c;
    for (int r = 2; r <= 4; ++r)
        for (int l = 2; l <= 4; ++l) c.cases.push_back({Family::C, r, l});
    for (int l = 2; l <= 3; ++l) c.cases.push_back({Family::F4, 4, l});
    for (int l = 2; l <= 4; ++l) c.cases.push_back({Family::G2, 2, l});
    for (int r = 2; r <= 4; ++r) c.dilog_cases.push_back({Family::C, r, 5});
    c.dilog_cases.push_back({Family::F4, 4, 5});
    c.dilog_cases.push_back({Family::G2, 2, 5});
    for (int r = 2; r <= 6; ++r) c.tvector_cases.push_back({Family::C, r, 2});
    c.tvector_cases.push_back({Family::F4, 4, 2});
    c.tvector_cases.push_back({Family::G2, 2, 2});
    c.orbits = true;
    c.properties = true;
    c.mutation_pairs = {{"C:3:2", "D:4:3"}, {"F4:2", "D:5:3"}, {"C:2:3", "A:3:4"}, {"G2:2", "C:3:2"}, {"G2:3", "C:3:3"}};
    c.fixtures_dir = default_fixtures_dir();
    return c;
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
    SuiteConfig c;
    c.fixtures_dir = default_fixtures_dir();
    if (j.contains("cases")) c.cases = specs_from_json(j["cases"]);
    if (j.contains("dilog_cases")) c.dilog_cases = specs_from_json(j["dilog_cases"]);
    if (j.contains("tvector_cases")) c.tvector_cases = specs_from_json(j["tvector_cases"]);
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        c.tol.relation = t.value("relation", c.tol.relation);
        c.tol.periodicity = t.value("periodicity", c.tol.periodicity);
        c.tol.dilog = t.value("dilog", c.tol.dilog);
        c.tol.functional = t.value("functional", c.tol.functional);
        c.tol.shadow = t.value("shadow", c.tol.shadow);
        c.tol.reflection = t.value("reflection", c.tol.reflection);
        c.tol.uniqueness = t.value("uniqueness", c.tol.uniqueness);
    }
    c.orbits = j.value("orbits", c.orbits);
    c.orbit_max_rank = j.value("orbit_max_rank", c.orbit_max_rank);
    c.properties = j.value("properties", c.properties);
    if (j.contains("mutation_pairs"))
        for (const auto& p : j["mutation_pairs"]) c.mutation_pairs.push_back({p.at(0), p.at(1)});
    if (j.contains("search")) {
        c.search.depth_cap = j["search"].value("depth_cap", c.search.depth_cap);
        c.search.node_cap = j["search"].value("node_cap", c.search.node_cap);
    }
    c.fixtures_dir = j.value("fixtures_dir", c.fixtures_dir);
    c.control = negative_control_from_string(j.value("negative_control", std::string("none")));
    c.threads = j.value("threads", c.threads);
    return c;
}

nlohmann::json SuiteConfig::to_json() const {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : mutation_pairs) pairs.push_back({p.left, p.right});
    return {{"cases", specs_to_json(cases)},
            {"dilog_cases", specs_to_json(dilog_cases)},
            {"tvector_cases", specs_to_json(tvector_cases)},
            {"seeds", seeds},
            {"tolerances",
             {{"relation", tol.relation},
              {"periodicity", tol.periodicity},
              {"dilog", tol.dilog},
              {"functional", tol.functional},
              {"shadow", tol.shadow},
              {"reflection", tol.reflection},
              {"uniqueness", tol.uniqueness}}},
            {"orbits", orbits},
            {"orbit_max_rank", orbit_max_rank},
            {"properties", properties},
            {"mutation_pairs", pairs},
            {"search", {{"depth_cap", search.depth_cap}, {"node_cap", search.node_cap}}},
            {"fixtures_dir", fixtures_dir},
            {"negative_control", clab::to_string(control)},
            {"threads", threads}};
}

Quiver control_quiver(const Quiver& q, NegativeControl c) {
    switch (c) {
        case NegativeControl::none: return q;
        case NegativeControl::global_flip: return opposite(q);
        case NegativeControl::mixed_flip: {
            const auto arrows = q.arrows();
            if (arrows.empty()) return q;
            Quiver out = q;
            const auto [i, j] = arrows.front();
            out.set(i, j, -q(i, j));
            return out;
        }
    }
    return q;
}

namespace {

using Clock = std::chrono::steady_clock;

/** Runs a check, timing it; an exception becomes a failing row. */
ReportRow make_row(const std::string& case_id, const std::string& check, const std::string& statement,
                   const std::function<CheckResult()>& fn) {
    ReportRow row{case_id, check, Status::pass, statement, nlohmann::json::object(), 0.0, {}};
    const auto t0 = Clock::now();
    try {
        const CheckResult res = fn();
        row.status = res.ok ? Status::pass : Status::fail;
        row.metrics = res.metrics;
        row.metrics["checked"] = res.checked;
        row.metrics["failures"] = res.n_failures;
        row.messages = res.failures;
        if (res.checked == 0 && res.ok) {
            row.status = Status::inconclusive;
            row.messages.push_back("nothing was checked");
        }
    } catch (const std::exception& e) {
        row.status = Status::fail;
        row.messages.push_back(e.what());
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return row;
}

nlohmann::json read_fixture(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name);
    if (!in) throw std::runtime_error("cannot open fixture " + dir + "/" + name);
    return nlohmann::json::parse(in);
}

// Sign counts of the C cases, shared with the level-rank check.
struct SharedCounts {
    std::mutex mu;
    LevelRankCounts counts;
};

std::vector<ReportRow> case_rows(const SuiteConfig& cfg, const FamilySpec& spec, SharedCounts& shared) {
    std::vector<ReportRow> rows;
    const std::string id = spec.id();
    Schedule s(spec);
    if (cfg.control != NegativeControl::none) s = s.with_initial(control_quiver(s.initial(), cfg.control));
    const int half = s.half_period_n();

    rows.push_back(make_row(id, "quiver_cycle", "composite mutations carry the quiver through its expected images",
                            [&] { return check_schedule_cycle(s, -2 * half, 2 * half); }));
    rows.push_back(make_row(id, "labelings", "mutation points and the grid points of P'_+ are in bijection",
                            [&] { return check_labelings(s); }));

    std::optional<TropicalRun> trop;
    std::optional<SignCounts> counts;
    rows.push_back(make_row(id, "tropical_counts", "tropical sign counts equal the closed forms (N+, N-)", [&] {
        trop.emplace(run_tropical(s));
        counts = count_signs(*trop);
        const auto [plus, minus] = expected_sign_counts(spec);
        CheckResult res{"tropical counts " + id};
        res.expect(counts->positive == plus, [&] {
            return "N+ = " + std::to_string(counts->positive) + ", closed form " + std::to_string(plus);
        });
        res.expect(counts->negative == minus, [&] {
            return "N- = " + std::to_string(counts->negative) + ", closed form " + std::to_string(minus);
        });
        res.metrics = {{"N_plus", counts->positive}, {"N_minus", counts->negative}, {"expected", {plus, minus}}};
        return res;
    }));
    auto need_trop = [&]() -> const TropicalRun& {
        if (!trop) throw std::runtime_error("tropical run unavailable");
        return *trop;
    };
    rows.push_back(make_row(id, "point_count", "N+ + N- equals the number of mutation points in a period", [&] {
        if (!counts) throw std::runtime_error("tropical run unavailable");
        return check_point_count(spec, *counts);
    }));
    rows.push_back(make_row(id, "tropical_periodicity",
                            "tropical Y-system: half period with omega, full period 2(h^vee + l)",
                            [&] { return check_tropical_periodicity(need_trop()); }));
    rows.push_back(make_row(id, "sign_pattern", "sign classification of tropical coefficients by region and time",
                            [&] {
                                CheckResult res = check_sign_pattern(need_trop());
                                const CheckResult b = check_boundary_tuples(need_trop());
                                res.merge(b);
                                res.metrics["boundary"] = b.metrics;
                                return res;
                            }));
    rows.push_back(make_row(id, "tropical_shadow", "numeric coefficients degenerate to the tropical exponents",
                            [&] { return check_tropical_shadow(need_trop(), cfg.seeds.empty() ? 1 : cfg.seeds.front(),
                                                               cfg.tol.shadow); }));

    rows.push_back(make_row(id, "numeric_T", "T-system relations and periodicity over positive reals", [&] {
        CheckResult res{"numeric T " + id};
        double worst_rel = 0.0, worst_per = 0.0;
        for (auto seed : cfg.seeds) {
            const NumericRun run = run_numeric(s, seed, CoefficientMode::trivial);
            const CheckResult a = check_T_residuals(run, cfg.tol.relation);
            const CheckResult b = check_numeric_periodicity(run, cfg.tol.periodicity);
            res.merge(a);
            res.merge(b);
            worst_rel = std::max(worst_rel, a.metrics.value("max_residual", 0.0));
            worst_per = std::max(worst_per, b.metrics.value("max_error", 0.0));
        }
        res.metrics = {{"seeds", cfg.seeds.size()}, {"max_residual", worst_rel}, {"max_periodicity_error", worst_per}};
        return res;
    }));

    std::vector<NumericRun> tracked;
    rows.push_back(make_row(id, "numeric_Y", "exchange relations, Y-system relations and periodicity with coefficients",
                            [&] {
                                CheckResult res{"numeric Y " + id};
                                double worst_x = 0.0, worst_y = 0.0, worst_per = 0.0;
                                for (auto seed : cfg.seeds) {
                                    tracked.push_back(run_numeric(s, seed, CoefficientMode::tracked));
                                    const NumericRun& run = tracked.back();
                                    const CheckResult a = check_x_relations(run, cfg.tol.relation);
                                    const CheckResult b = check_Y_residuals(run, cfg.tol.relation);
                                    const CheckResult c = check_numeric_periodicity(run, cfg.tol.periodicity);
                                    res.merge(a);
                                    res.merge(b);
                                    res.merge(c);
                                    worst_x = std::max(worst_x, a.metrics.value("max_residual", 0.0));
                                    worst_y = std::max(worst_y, b.metrics.value("max_residual", 0.0));
                                    worst_per = std::max(worst_per, c.metrics.value("max_error", 0.0));
                                }
                                res.metrics = {{"seeds", cfg.seeds.size()},
                                               {"max_x_residual", worst_x},
                                               {"max_Y_residual", worst_y},
                                               {"max_periodicity_error", worst_per}};
                                return res;
                            }));

    rows.push_back(make_row(id, "dilog_constant", "constant dilogarithm identity equals r(l h - h^vee)/(h^vee + l)",
                            [&] { return check_DI(spec, cfg.tol.dilog); }));
    rows.push_back(make_row(id, "dilog_functional", "functional dilogarithm identities: class sums N-, N+",
                            [&] {
                                if (!counts) throw std::runtime_error("tropical run unavailable");
                                if (tracked.empty()) throw std::runtime_error("no numeric runs");
                                return check_functional_DI(tracked, *counts, cfg.tol.functional);
                            }));

    if (cfg.properties) {
        rows.push_back(make_row(id, "composite_order", "composite mutations do not depend on the order",
                                [&] { return check_composite_order(spec, 5, 1); }));
        rows.push_back(make_row(id, "constant_Y_uniqueness",
                                "the constant Y-system has one positive solution (20 random starts)",
                                [&] { return check_constant_Y_uniqueness(spec, 20, cfg.tol.uniqueness); }));
    }
    if (counts && spec.family == Family::C && cfg.control == NegativeControl::none) {
        std::lock_guard<std::mutex> lock(shared.mu);
        shared.counts[{spec.rank, spec.level}] = *counts;
    }
    return rows;
}

std::vector<ReportRow> orbit_rows(const SuiteConfig& cfg) {
    std::vector<ReportRow> rows;
    const std::string id = "roots";
    rows.push_back(make_row(id, "orbit_tables", "D_{r+1} orbit tables for r = 10 and r = 9", [&] {
        const auto j = read_fixture(cfg.fixtures_dir, "d_orbit_tables.json");
        CheckResult res{"orbit tables"};
        for (const auto& t : j.at("tables")) {
            const CheckResult c = check_orbit_table_fixture(t);
            res.merge(c);
            res.metrics["r=" + std::to_string(t.at("r").get<int>())] = c.metrics;
        }
        return res;
    }));
    rows.push_back(make_row(id, "orbit_lists", "orbit lists of sigma on E_6 and D_4", [&] {
        const auto j = read_fixture(cfg.fixtures_dir, "orbit_lists.json");
        CheckResult res{"orbit lists"};
        res.merge(check_orbit_list_fixture(core_root_system(Family::F4, 4), core_sigma(Family::F4, 4),
                                           j.at("E6").at("chains")));
        res.merge(check_orbit_list_fixture(core_root_system(Family::G2, 2), core_sigma(Family::G2, 2),
                                           j.at("D4").at("chains")));
        return res;
    }));
    rows.push_back(make_row(id, "orbit_partition", "the sigma orbits partition the positive roots", [&] {
        CheckResult res{"orbit partition"};
        long systems = 0;
        auto add = [&](const RootSystem& rs, const SigmaMap& map) {
            res.merge(check_orbit_partition(rs, orbit_decomposition(rs, map)));
            ++systems;
        };
        for (int r = 2; r <= cfg.orbit_max_rank; ++r) {
            add(RootSystem::make('D', r + 1), sigma_C_D(r));
            if (r >= 3) add(RootSystem::make('A', r - 1), sigma_C_A(r));
        }
        add(core_root_system(Family::F4, 4), core_sigma(Family::F4, 4));
        add(core_root_system(Family::G2, 2), core_sigma(Family::G2, 2));
        res.metrics["systems"] = systems;
        return res;
    }));
    rows.push_back(make_row(id, "orbit_lengths", "orbit lengths and end points on D_{r+1}", [&] {
        CheckResult res{"orbit lengths"};
        for (int r = 2; r <= cfg.orbit_max_rank; ++r) res.merge(check_D_orbit_lengths(r));
        return res;
    }));
    rows.push_back(make_row(id, "alpha_recurrence", "recurrences of alpha_i(u) for type C", [&] {
        CheckResult res{"alpha recurrences"};
        for (int r = 2; r <= cfg.orbit_max_rank; ++r) res.merge(check_alpha_recurrence(r));
        return res;
    }));
    rows.push_back(make_row(id, "rho", "rho maps the D_{r+1} orbits onto the A_{2r+1} Coxeter orbits", [&] {
        CheckResult res{"rho"};
        nlohmann::json leaving = nlohmann::json::object();
        for (int r = 2; r <= cfg.orbit_max_rank; ++r) {
            const CheckResult c = check_rho(r);
            res.merge(c);
            const long out = c.metrics.value("pairs_leaving_positive", -1L);
            leaving[std::to_string(r)] = out;
            // the pairs where (s')^2 rho(beta) is a negative root are a known, fixed set
            res.expect(out == r - 1, [&] {
                return "r=" + std::to_string(r) + ": " + std::to_string(out) + " pairs leave the positive roots";
            });
        }
        res.metrics["pairs_leaving_positive"] = leaving;
        return res;
    }));
    return rows;
}

std::vector<ReportRow> property_rows(const SuiteConfig& cfg, SharedCounts& shared) {
    std::vector<ReportRow> rows;
    const std::string id = "properties";
    rows.push_back(make_row(id, "mutation_involution", "mutation is an involution preserving skew-symmetry",
                            [&] { return check_mutation_involution(1000, 1); }));
    rows.push_back(make_row(id, "sigma_involution", "each sigma_i is an involution on the almost positive roots",
                            [&] { return check_all_sigma_involutions(cfg.orbit_max_rank); }));
    rows.push_back(make_row(id, "rogers_reflection", "L(x) + L(1-x) = pi^2/6 on a grid of 1001 points",
                            [&] { return check_rogers_reflection(1000, cfg.tol.reflection); }));
    rows.push_back(make_row(id, "level_rank", "N+(r, l) = N-(l, r) for type C, r, l in {2, 3, 4}", [&] {
        LevelRankCounts counts;
        {
            std::lock_guard<std::mutex> lock(shared.mu);
            counts = shared.counts;
        }
        for (int r = 2; r <= 4; ++r)
            for (int l = 2; l <= 4; ++l)
                if (!counts.count({r, l})) counts[{r, l}] = count_signs(run_tropical(Schedule({Family::C, r, l})));
        LevelRankCounts window;
        for (const auto& [key, c] : counts)
            if (key.first <= 4 && key.second <= 4) window[key] = c;
        return check_level_rank(window);
    }));
    return rows;
}

std::vector<ReportRow> mutation_rows(const SuiteConfig& cfg, const MutationPair& pair) {
    const std::string id = pair.left + "~" + pair.right;
    ReportRow row = make_row(id, "mutation_equivalence", "the two quivers are mutation equivalent", [&] {
        const Quiver q1 = build(parse_spec(pair.left)), q2 = build(parse_spec(pair.right));
        SearchStats stats;
        const auto path = search_equivalence(q1, q2, cfg.search, &stats);
        CheckResult res{"mutation equivalence " + id};
        res.metrics = {{"nodes", stats.nodes},
                       {"depth_left", stats.depth_left},
                       {"depth_right", stats.depth_right},
                       {"skipped_large", stats.skipped_large},
                       {"found", path.has_value()}};
        if (!path) return res;  // nothing checked: inconclusive
        const CheckResult v = verify_path(*path, q2);
        res.merge(v);
        res.metrics["length"] = path->moves.size();
        res.metrics["moves"] = path->moves;
        return res;
    });
    if (row.status == Status::inconclusive) row.messages = {"search caps exhausted without a meeting point"};
    return {row};
}

int resolve_threads(const SuiteConfig& cfg) { return cfg.threads > 0 ? cfg.threads : threads_from_env(); }

/** Runs the jobs on a small pool; results stay in job order. */
std::vector<ReportRow> dispatch(const std::vector<std::function<std::vector<ReportRow>()>>& jobs, int threads) {
    std::vector<std::vector<ReportRow>> out(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < jobs.size();) out[k] = jobs[k]();
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<ReportRow> rows;
    for (auto& part : out) rows.insert(rows.end(), part.begin(), part.end());
    return rows;
}

}  // namespace

std::vector<ReportRow> run_suite(const SuiteConfig& cfg) {
    SharedCounts shared;
    std::vector<std::function<std::vector<ReportRow>()>> jobs;
    for (const auto& spec : cfg.cases) jobs.push_back([&cfg, spec, &shared] { return case_rows(cfg, spec, shared); });
    for (const auto& spec : cfg.dilog_cases)
        jobs.push_back([&cfg, spec] {
            return std::vector<ReportRow>{make_row(spec.id(), "dilog_constant",
                                                   "constant dilogarithm identity equals r(l h - h^vee)/(h^vee + l)",
                                                   [&] { return check_DI(spec, cfg.tol.dilog); })};
        });
    for (const auto& spec : cfg.tvector_cases)
        jobs.push_back([spec] {
            return std::vector<ReportRow>{make_row(spec.id(), "tvectors",
                                                   "specialized tropical exponents equal -alpha_i(u)",
                                                   [&] { return check_tvectors(run_tropical(Schedule(spec))); })};
        });
    if (cfg.orbits) jobs.push_back([&cfg] { return orbit_rows(cfg); });
    for (const auto& pair : cfg.mutation_pairs) jobs.push_back([&cfg, pair] { return mutation_rows(cfg, pair); });
    const int threads = resolve_threads(cfg);
    std::vector<ReportRow> rows = dispatch(jobs, threads);
    // the level-rank check reuses the counts of the case jobs
    if (cfg.properties) {
        const auto more = property_rows(cfg, shared);
        rows.insert(rows.end(), more.begin(), more.end());
    }
    return rows;
}

bool suite_passed(const std::vector<ReportRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == Status::pass; });
}

void write_jsonl(std::ostream& os, const std::vector<ReportRow>& rows) {
    for (const auto& row : rows) os << to_json(row).dump() << '\n';
}

}  // namespace clab
