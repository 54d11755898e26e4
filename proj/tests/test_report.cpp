#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "clab/report.hpp"

using namespace clab;

namespace {

const ReportRow& row_of(const std::vector<ReportRow>& rows, const std::string& check) {
    for (const auto& r : rows)
        if (r.check == check) return r;
    FAIL("missing row " << check);
    return rows.front();
}

}  // namespace

TEST_CASE("an empty configuration gives an empty, passing report") {
    const auto rows = run_suite(SuiteConfig::from_json(nlohmann::json::object()));
    CHECK(rows.empty());
    CHECK(suite_passed(rows));
}

TEST_CASE("one case produces every per-case row and passes") {
    SuiteConfig cfg;
    cfg.cases = {parse_spec("C:2:2")};
    cfg.seeds = {1, 2};
    const auto rows = run_suite(cfg);
    for (const char* check : {"quiver_cycle", "labelings", "tropical_counts", "point_count", "tropical_periodicity",
                              "sign_pattern", "tropical_shadow", "numeric_T", "numeric_Y", "dilog_constant",
                              "dilog_functional"}) {
        const ReportRow& r = row_of(rows, check);
        CAPTURE(check);
        CHECK(r.status == Status::pass);
        CHECK(r.case_id == "C2_l2");
    }
    CHECK(row_of(rows, "tropical_counts").metrics["N_plus"] == 20);
    CHECK(suite_passed(rows));
}

TEST_CASE("negative controls make the schedule assertions fail at the first step") {
    for (NegativeControl c : {NegativeControl::global_flip, NegativeControl::mixed_flip}) {
        SuiteConfig cfg;
        cfg.cases = {parse_spec("C:3:2"), parse_spec("G2:2")};
        cfg.seeds = {1};
        cfg.control = c;
        const auto rows = run_suite(cfg);
        CHECK_FALSE(suite_passed(rows));
        for (const auto& r : rows) {
            if (r.check != "quiver_cycle") continue;
            CAPTURE(to_string(c));
            CHECK(r.status == Status::fail);
            // the first composite step is u = 1/t: 1/2 for C, 1/3 for G2
            CHECK(r.metrics["first_failure_step"] == (r.case_id == "G2_l2" ? "1/3" : "1/2"));
        }
    }
}

TEST_CASE("control quivers") {
    Quiver q(3);
    q.add_arrow(0, 1);
    q.add_arrow(1, 2);
    CHECK(control_quiver(q, NegativeControl::none).same_matrix(q));
    CHECK(control_quiver(q, NegativeControl::global_flip).same_matrix(opposite(q)));
    const Quiver m = control_quiver(q, NegativeControl::mixed_flip);
    CHECK(m(1, 0) == 1);
    CHECK(m(1, 2) == 1);
    CHECK(negative_control_from_string("mixed_flip") == NegativeControl::mixed_flip);
    CHECK_THROWS(negative_control_from_string("sideways"));
}

TEST_CASE("configuration JSON round trip") {
    SuiteConfig cfg = SuiteConfig::acceptance();
    cfg.control = NegativeControl::global_flip;
    cfg.tol.dilog = 1e-7;
    cfg.threads = 3;
    const nlohmann::json j = cfg.to_json();
    const SuiteConfig back = SuiteConfig::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.cases.size() == cfg.cases.size());
    CHECK(back.mutation_pairs.size() == 5);
    CHECK(back.tol.dilog == 1e-7);
    CHECK(back.control == NegativeControl::global_flip);
}

TEST_CASE("JSON Lines output") {
    SuiteConfig cfg;
    cfg.dilog_cases = {parse_spec("G2:2")};
    const auto rows = run_suite(cfg);
    REQUIRE(rows.size() == 1);
    std::ostringstream os;
    write_jsonl(os, rows);
    const std::string text = os.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    const auto j = nlohmann::json::parse(text);
    for (const char* key : {"case", "check", "status", "statement", "metrics", "seconds", "messages"})
        CHECK(j.contains(key));
    CHECK(j["status"] == "pass");
    CHECK(j["check"] == "dilog_constant");
}

TEST_CASE("rows keep configuration order with several threads") {
    SuiteConfig cfg;
    cfg.dilog_cases = {parse_spec("C:2:2"), parse_spec("G2:3"), parse_spec("F4:2"), parse_spec("C:3:4")};
    cfg.threads = 4;
    const auto rows = run_suite(cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].case_id == "C2_l2");
    CHECK(rows[1].case_id == "G2_l3");
    CHECK(rows[2].case_id == "F4_l2");
    CHECK(rows[3].case_id == "C3_l4");
}
