/**
 * \file clab_cli.cpp
 *
 * Command line entry point: build, schedule, tropical, numeric, orbits,
 * dilog, mutclass and suite. Thread count for the suite and the mutation
 * search comes from CLAB_THREADS unless given explicitly.
 */
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "clab/builders.hpp"
#include "clab/dilog.hpp"
#include "clab/mutclass.hpp"
#include "clab/numeric.hpp"
#include "clab/report.hpp"
#include "clab/roots.hpp"
#include "clab/schedule.hpp"
#include "clab/tropical.hpp"

using namespace clab;
using nlohmann::json;

namespace {

/** --family/--rank/--level, or --spec "C:3:2". */
struct CaseOptions {
    std::string family = "C";
    int rank = 0;
    int level = 2;
    std::string spec;

    void add(CLI::App* app) {
        app->add_option("--family", family, "C, F4 or G2 (A, D, E6 for square products)");
        app->add_option("--rank", rank, "rank r (C, A, D)");
        app->add_option("--level", level, "level l >= 2");
        app->add_option("--spec", spec, "short form such as C:3:2 or G2:3");
    }

    FamilySpec resolve() const {
        if (!spec.empty()) return parse_spec(spec);
        FamilySpec s;
        s.family = family_from_string(family);
        s.level = level;
        switch (s.family) {
            case Family::F4: s.rank = 4; break;
            case Family::G2: s.rank = 2; break;
            case Family::SquareE6: s.rank = 6; break;
            default: s.rank = rank; break;
        }
        validate(s);
        return s;
    }
};

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << '\n';
}

json vertex_json(const Quiver& q, int v) {
    const auto& m = q.meta()[v];
    return {{"vertex", v}, {"col", m.col}, {"row", m.row}};
}

int cmd_build(const CaseOptions& c, const std::string& out) {
    const FamilySpec spec = c.resolve();
    const Quiver q = build(spec);
    json j = to_json(q);
    j["case"] = spec.id();
    emit(j, out);
    return 0;
}

int cmd_schedule(const CaseOptions& c, const std::string& from, const std::string& to, bool cycle_reading) {
    const Schedule s(c.resolve(), cycle_reading ? CycleReading::cycle : CycleReading::one_line);
    const int n_from = parse_time(from, s.t()), n_to = parse_time(to, s.t());
    if (n_to < n_from) throw std::invalid_argument("--to is before --from");
    json steps = json::array();
    for (const auto& st : s.steps(n_from, n_to)) {
        json vs = json::array();
        for (int v : st.vertices) {
            json vj = vertex_json(s.initial(), v);
            const GridPoint p = s.mutation_point_label(v, st.n_from);
            vj["label"] = {{"a", p.a}, {"m", p.m}};
            vs.push_back(vj);
        }
        steps.push_back({{"u_from", format_time(st.n_from, s.t())},
                         {"u_to", format_time(st.n_to, s.t())},
                         {"mutated", vs},
                         {"expected_quiver", st.expected.name}});
    }
    // replay the requested window so the printed expectations are also checked
    const CheckResult cyc = check_schedule_cycle(s, std::min(n_from, 0), std::max(n_to, 0));
    emit({{"case", s.spec().id()}, {"t", s.t()}, {"steps", steps}, {"check", to_json(cyc)}}, "");
    return cyc.ok ? 0 : 1;
}

int cmd_tropical(const CaseOptions& c, const std::string& report) {
    const Schedule s(c.resolve());
    const TropicalRun run = run_tropical(s);
    json j = tropical_report(run);
    const CheckResult checks[] = {check_tropical_periodicity(run), check_sign_pattern(run),
                                  check_boundary_tuples(run)};
    bool ok = j["counts"]["positive"] == j["expected"]["positive"] &&
              j["counts"]["negative"] == j["expected"]["negative"];
    j["checks"] = json::array();
    for (const auto& r : checks) {
        j["checks"].push_back(to_json(r));
        ok = ok && r.ok;
    }
    if (report.empty()) j.erase("points");  // keep the terminal output short
    emit(j, report);
    if (!report.empty())
        std::cout << s.spec().id() << ": N+ = " << j["counts"]["positive"] << ", N- = " << j["counts"]["negative"]
                  << (ok ? " (all checks pass)" : " (FAILED)") << '\n';
    return ok ? 0 : 1;
}

int cmd_numeric(const CaseOptions& c, int seeds, double tol, const std::string& out) {
    const Schedule s(c.resolve());
    double res_T = 0, res_x = 0, res_Y = 0, per = 0;
    bool ok = true;
    json failures = json::array();
    auto take = [&](const CheckResult& r, double& worst, const char* key) {
        worst = std::max(worst, r.metrics.value(key, 0.0));
        ok = ok && r.ok;
        for (const auto& f : r.failures) failures.push_back(f);
    };
    for (int k = 1; k <= seeds; ++k) {
        const NumericRun triv = run_numeric(s, k, CoefficientMode::trivial);
        take(check_T_residuals(triv, std::min(tol, 1e-9)), res_T, "max_residual");
        take(check_numeric_periodicity(triv, tol), per, "max_error");
        const NumericRun tr = run_numeric(s, k, CoefficientMode::tracked);
        take(check_x_relations(tr, std::min(tol, 1e-9)), res_x, "max_residual");
        take(check_Y_residuals(tr, std::min(tol, 1e-9)), res_Y, "max_residual");
        take(check_numeric_periodicity(tr, tol), per, "max_error");
    }
    emit({{"case", s.spec().id()},
          {"seeds", seeds},
          {"tol", tol},
          {"max_T_residual", res_T},
          {"max_x_residual", res_x},
          {"max_Y_residual", res_Y},
          {"max_periodicity_error", per},
          {"ok", ok},
          {"failures", failures}},
         out);
    return ok ? 0 : 1;
}

int cmd_orbits(char type, int rank, const std::string& sigma, bool by_time) {
    RootSystem rs = RootSystem::make(type, rank);
    SigmaMap map;
    if (sigma == "C") {
        if (type != 'D') throw std::invalid_argument("--sigma C acts on type D (rank r+1)");
        map = sigma_C_D(rank - 1);
    } else if (sigma == "CA") {
        if (type != 'A') throw std::invalid_argument("--sigma CA acts on type A (rank r-1)");
        map = sigma_C_A(rank + 1);
    } else if (sigma == "F4") {
        if (type != 'E' || rank != 6) throw std::invalid_argument("--sigma F4 acts on E6");
        map = sigma_F4();
    } else if (sigma == "G2") {
        if (type != 'D' || rank != 4) throw std::invalid_argument("--sigma G2 acts on D4");
        rs = d4_central();
        map = sigma_G2();
    } else if (sigma == "coxeter") {
        if (type != 'A' || rank % 2 == 0) throw std::invalid_argument("--sigma coxeter acts on A_{2r+1}");
        map = sigma_A_coxeter((rank - 1) / 2);
    } else {
        throw std::invalid_argument("unknown --sigma '" + sigma + "' (C, CA, F4, G2, coxeter)");
    }
    if (by_time) {
        if (sigma != "C") throw std::invalid_argument("--by-time needs --sigma C");
        const int r = rank - 1;
        for (int row = 1; row <= r; ++row) {
            std::cout << (row < r ? "alpha_" + std::to_string(row) : "alpha_" + std::to_string(r) + "/" + std::to_string(r + 1))
                      << ":";
            for (int n = 2; n >= -2 * (r + 3); --n)
                if (auto a = orbit_table_entry(r, row, n)) std::cout << "  u=" << format_time(n, 2) << " " << rs.format(*a);
            std::cout << '\n';
        }
        return 0;
    }
    for (const auto& line : orbit_table_lines(rs, map)) std::cout << line << '\n';
    const CheckResult part = check_orbit_partition(rs, orbit_decomposition(rs, map));
    std::cout << part.summary() << '\n';
    return part.ok ? 0 : 1;
}

int cmd_dilog(const CaseOptions& c, bool functional, int seeds) {
    const FamilySpec spec = c.resolve();
    std::cout << std::setprecision(15);
    const CheckResult di = check_DI(spec);
    std::cout << spec.id() << " constant: LHS " << di.metrics["lhs"].get<double>() << "  RHS "
              << di.metrics["rhs"].get<double>() << "  abs error " << di.metrics["abs_error"].get<double>() << '\n';
    bool ok = di.ok;
    if (functional) {
        const Schedule s(spec);
        const SignCounts counts = count_signs(run_tropical(s));
        std::vector<NumericRun> runs;
        for (int k = 1; k <= seeds; ++k) runs.push_back(run_numeric(s, k, CoefficientMode::tracked));
        const CheckResult f = check_functional_DI(runs, counts);
        const auto [rhs_minus, rhs_plus] = functional_rhs(spec);
        for (const auto& r : f.metrics["runs"]) {
            const double ys = r["y_sum"], is = r["inv_sum"];
            std::cout << spec.id() << " functional: 2 sum L(Y/(1+Y)) = " << 2 * ys << "  RHS " << rhs_minus
                      << "  abs error " << std::abs(2 * ys - rhs_minus) << ";  2 sum L(1/(1+Y)) = " << 2 * is
                      << "  RHS " << rhs_plus << "  abs error " << std::abs(2 * is - rhs_plus) << '\n';
        }
        if (!f.ok) std::cout << f.summary() << '\n';
        ok = ok && f.ok;
    }
    if (!di.ok) std::cout << di.summary() << '\n';
    return ok ? 0 : 1;
}

int cmd_mutclass(const std::string& left, const std::string& right, int depth, long nodes, int threads) {
    const Quiver q1 = build(parse_spec(left)), q2 = build(parse_spec(right));
    SearchOptions opt;
    opt.depth_cap = depth;
    opt.node_cap = nodes;
    opt.threads = threads > 0 ? threads : threads_from_env();
    SearchStats stats;
    const auto path = search_equivalence(q1, q2, opt, &stats);
    json j = {{"left", left},
              {"right", right},
              {"nodes", stats.nodes},
              {"depth_left", stats.depth_left},
              {"depth_right", stats.depth_right},
              {"skipped_large", stats.skipped_large}};
    if (!path) {
        j["status"] = "inconclusive";
        emit(j, "");
        return 2;
    }
    json moves = json::array();
    for (int k : path->moves) moves.push_back(vertex_json(q1, k));
    j["path"] = moves;
    j["final_isomorphism"] = path->final_iso;
    const CheckResult v = verify_path(*path, q2);
    j["status"] = v.ok ? "found" : "fail";
    j["verified"] = v.ok;
    emit(j, "");
    return v.ok ? 0 : 1;
}

int cmd_suite(const std::string& config, const std::string& out, const std::string& control, int threads,
              bool print_config) {
    SuiteConfig cfg = SuiteConfig::acceptance();
    if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw std::runtime_error("cannot open " + config);
        cfg = SuiteConfig::from_json(json::parse(in));
    }
    if (!control.empty()) cfg.control = negative_control_from_string(control);
    if (threads > 0) cfg.threads = threads;
    if (print_config) {
        std::cout << cfg.to_json().dump(2) << '\n';
        return 0;
    }
    const auto rows = run_suite(cfg);
    if (out.empty() || out == "-") {
        write_jsonl(std::cout, rows);
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        write_jsonl(f, rows);
    }
    long pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : rows) {
        if (r.status == Status::pass) ++pass;
        else if (r.status == Status::fail) ++fail;
        else ++inconclusive;
        if (r.status != Status::pass)
            std::cerr << r.case_id << " " << r.check << ": " << to_string(r.status)
                      << (r.messages.empty() ? "" : " - " + r.messages.front()) << '\n';
    }
    std::cerr << rows.size() << " rows: " << pass << " pass, " << fail << " fail, " << inconclusive
              << " inconclusive\n";
    return suite_passed(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodicities of T- and Y-systems, dilogarithm identities and quiver mutations"};
    app.require_subcommand(1);

    CaseOptions build_case;
    std::string build_out;
    auto* build_cmd = app.add_subcommand("build", "build a quiver and print it as JSON");
    build_case.add(build_cmd);
    build_cmd->add_option("--out", build_out, "output file (default stdout)");

    CaseOptions sched_case;
    std::string sched_from = "0", sched_to = "1";
    bool sched_cycle = false;
    auto* sched_cmd = app.add_subcommand("schedule", "print the mutation steps between two times");
    sched_case.add(sched_cmd);
    sched_cmd->add_option("--from", sched_from, "start time u (e.g. 0, -1/2)");
    sched_cmd->add_option("--to", sched_to, "end time u");
    sched_cmd->add_flag("--cycle-notation", sched_cycle, "read the G2 3-cycles in cycle notation");

    CaseOptions trop_case;
    std::string trop_report;
    auto* trop_cmd = app.add_subcommand("tropical", "tropical Y-system: exponent vectors and sign counts");
    trop_case.add(trop_cmd);
    trop_cmd->add_option("--report", trop_report, "write the per-point exponent vectors to this JSON file");

    CaseOptions num_case;
    int num_seeds = 5;
    double num_tol = 1e-8;
    std::string num_out;
    auto* num_cmd = app.add_subcommand("numeric", "T- and Y-system residuals and periodicity over positive reals");
    num_case.add(num_cmd);
    num_cmd->add_option("--seeds", num_seeds, "number of random initializations");
    num_cmd->add_option("--tol", num_tol, "periodicity tolerance (relations use min(tol, 1e-9))");
    num_cmd->add_option("--out", num_out, "output file (default stdout)");

    std::string orb_type = "D", orb_sigma = "C";
    int orb_rank = 11;
    bool orb_by_time = false;
    auto* orb_cmd = app.add_subcommand("orbits", "orbit decomposition of the positive roots");
    orb_cmd->add_option("--type", orb_type, "A, D or E");
    orb_cmd->add_option("--rank", orb_rank, "rank of the root system");
    orb_cmd->add_option("--sigma", orb_sigma, "C (on D_{r+1}), CA (on A_{r-1}), F4 (on E6), G2 (on D4), coxeter");
    orb_cmd->add_flag("--by-time", orb_by_time, "print alpha_i(u) row by row (with --sigma C)");

    CaseOptions dil_case;
    bool dil_functional = false;
    int dil_seeds = 5;
    auto* dil_cmd = app.add_subcommand("dilog", "dilogarithm identities");
    dil_case.add(dil_cmd);
    dil_cmd->add_flag("--functional", dil_functional, "also check the functional identities");
    dil_cmd->add_option("--seeds", dil_seeds, "random initializations for --functional");

    std::string mc_left, mc_right;
    int mc_depth = 12, mc_threads = 0;
    long mc_nodes = 1000000;
    auto* mc_cmd = app.add_subcommand("mutclass", "search a mutation sequence between two quivers");
    mc_cmd->add_option("--left", mc_left, "e.g. C:3:2")->required();
    mc_cmd->add_option("--right", mc_right, "e.g. D:4:3")->required();
    mc_cmd->add_option("--depth", mc_depth, "depth cap per side");
    mc_cmd->add_option("--nodes", mc_nodes, "node cap over both sides");
    mc_cmd->add_option("--threads", mc_threads, "worker threads (default CLAB_THREADS)");

    std::string suite_config, suite_out, suite_control;
    int suite_threads = 0;
    bool suite_print = false;
    auto* suite_cmd = app.add_subcommand("suite", "run the verification suite and write JSON Lines");
    suite_cmd->add_option("--config", suite_config, "JSON configuration (default: the acceptance suite)");
    suite_cmd->add_option("--out", suite_out, "report file (default stdout)");
    suite_cmd->add_option("--negative-control", suite_control, "none, global_flip or mixed_flip");
    suite_cmd->add_option("--threads", suite_threads, "worker threads (default CLAB_THREADS)");
    suite_cmd->add_flag("--print-config", suite_print, "print the effective configuration and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build_cmd) return cmd_build(build_case, build_out);
        if (*sched_cmd) return cmd_schedule(sched_case, sched_from, sched_to, sched_cycle);
        if (*trop_cmd) return cmd_tropical(trop_case, trop_report);
        if (*num_cmd) return cmd_numeric(num_case, num_seeds, num_tol, num_out);
        if (*orb_cmd) {
            if (orb_type.size() != 1) throw std::invalid_argument("--type is a single letter");
            return cmd_orbits(orb_type[0], orb_rank, orb_sigma, orb_by_time);
        }
        if (*dil_cmd) return cmd_dilog(dil_case, dil_functional, dil_seeds);
        if (*mc_cmd) return cmd_mutclass(mc_left, mc_right, mc_depth, mc_nodes, mc_threads);
        if (*suite_cmd) return cmd_suite(suite_config, suite_out, suite_control, suite_threads, suite_print);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
