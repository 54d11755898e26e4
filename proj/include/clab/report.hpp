/**
 * \file report.hpp
 *
 * The verification suite: a declarative configuration, one report row per
 * (case, check), JSON Lines output and the negative controls that must make
 * the schedule assertions fail.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "clab/builders.hpp"
#include "clab/check.hpp"
#include "clab/mutclass.hpp"

namespace clab {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct ReportRow {
    std::string case_id;    ///< e.g. "C3_l2", "roots", "mutation", "properties"
    std::string check;      ///< e.g. "tropical_counts"
    Status status = Status::pass;
    std::string statement;  ///< the mathematical statement the row verifies
    nlohmann::json metrics = nlohmann::json::object();
    double seconds = 0.0;
    std::vector<std::string> messages;
};

nlohmann::json to_json(const ReportRow& row);

struct Tolerances {
    double relation = 1e-9;     ///< T/Y/exchange relation residuals (relative)
    double periodicity = 1e-8;  ///< numeric half/full periodicity (relative)
    double dilog = 1e-8;        ///< constant dilogarithm identity (absolute)
    double functional = 1e-6;   ///< functional identity class sums (absolute)
    double shadow = 1e-6;       ///< tropical shadow log-slopes
    double reflection = 1e-12;  ///< L(x) + L(1-x) grid
    double uniqueness = 1e-10;  ///< constant Y-system from random starts
};

/** Replaces the built initial quiver of every case (the schedule expectations stay). */
enum class NegativeControl { none, global_flip, mixed_flip };

std::string to_string(NegativeControl c);
NegativeControl negative_control_from_string(const std::string& s);

struct MutationPair {
    std::string left;   ///< spec such as "C:3:2"
    std::string right;  ///< spec such as "D:4:3"
};

/**
 * Everything the suite runs. A default-constructed config runs nothing;
 * acceptance() is the full suite.
 */
struct SuiteConfig {
    std::vector<FamilySpec> cases;         ///< schedule, tropical, numeric and dilog checks
    std::vector<FamilySpec> dilog_cases;   ///< constant dilogarithm identity only
    std::vector<FamilySpec> tvector_cases; ///< t-vector identities (level 2)
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};  ///< numeric initializations per case
    Tolerances tol;
    bool orbits = false;                   ///< orbit tables, lists and root-system checks
    int orbit_max_rank = 10;
    bool properties = false;               ///< cross-module property checks
    std::vector<MutationPair> mutation_pairs;
    SearchOptions search;
    std::string fixtures_dir;
    NegativeControl control = NegativeControl::none;
    int threads = 0;  ///< 0: take CLAB_THREADS

    static SuiteConfig acceptance();
    /** Keys that are absent keep the default-constructed value; see README for the schema. */
    static SuiteConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/** Directory of the bundled fixtures, fixed at build time. */
std::string default_fixtures_dir();

/** Runs the suite; rows come out in configuration order whatever the thread count. */
std::vector<ReportRow> run_suite(const SuiteConfig& config);

/** Conjunction of the row statuses (inconclusive counts as not passing). */
bool suite_passed(const std::vector<ReportRow>& rows);

void write_jsonl(std::ostream& os, const std::vector<ReportRow>& rows);

/** Initial quiver for a negative control: every arrow reversed, or only the first arrow reversed. */
Quiver control_quiver(const Quiver& q, NegativeControl c);

}  // namespace clab
