#include <doctest.h>

#include <fstream>

#include "clab/roots.hpp"

using namespace clab;

namespace {

nlohmann::json fixture(const std::string& name) {
    std::ifstream in(std::string(CLAB_TEST_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("positive root counts") {
    CHECK(RootSystem::make('D', 4).positive_roots().size() == 12);
    CHECK(RootSystem::make('A', 5).positive_roots().size() == 15);
    CHECK(RootSystem::make('E', 6).positive_roots().size() == 36);
    CHECK(RootSystem::make('D', 11).positive_roots().size() == 110);
    CHECK(d4_central().positive_roots().size() == 12);
}

TEST_CASE("sigma_i on negative simple roots") {
    const RootSystem rs = RootSystem::make('D', 5);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) CHECK(rs.sigma(i, rs.neg_simple(i)) == rs.simple(i));
            else CHECK(rs.sigma(i, rs.neg_simple(j)) == rs.neg_simple(j));
        }
    CHECK_THROWS_AS(rs.sigma(1, RootVector{1, -1, 0, 0, 0}), RootError);
}

TEST_CASE("sigma_i is an involution on the almost positive roots") {
    for (int r = 2; r <= 8; ++r) CHECK(check_sigma_involutions(RootSystem::make('D', r + 1)).ok);
    CHECK(check_sigma_involutions(RootSystem::make('E', 6)).ok);
    CHECK(check_sigma_involutions(d4_central()).ok);
    CHECK(check_sigma_involutions(RootSystem::make('A', 9)).ok);
}

TEST_CASE("D4 with the G2 word: sigma(-alpha_4) = alpha_2 + alpha_3 + alpha_4") {
    const RootSystem rs = d4_central();
    CHECK(sigma_apply(rs, sigma_G2(), rs.neg_simple(4)) == rs.parse("α_2+α_3+α_4"));
}

TEST_CASE("D_11 orbit of -alpha_1") {
    const RootSystem rs = RootSystem::make('D', 11);
    const auto chain = orbit_chain(rs, sigma_C_D(10), rs.neg_simple(1));
    REQUIRE(chain.size() >= 3);
    CHECK(chain[1] == rs.parse("[2,3]"));
    CHECK(chain[2] == rs.parse("[6,7]"));
    CHECK(chain.back() == rs.neg_simple(1));
}

TEST_CASE("E6 orbit of -alpha_4") {
    const RootSystem rs = RootSystem::make('E', 6);
    const auto chain = orbit_chain(rs, sigma_F4(), rs.neg_simple(4));
    std::vector<RootVector> expected{rs.neg_simple(4), rs.parse("[2]"), rs.parse("[1,2,3,4]"), rs.parse("[3,4,5,6]"),
                                     rs.parse("[3,5]"), rs.neg_simple(4)};  // closes on itself
    CHECK(chain == expected);
}

TEST_CASE("orbits partition the positive roots") {
    const RootSystem d4 = d4_central();
    const auto orbits = orbit_decomposition(d4, sigma_G2());
    CHECK(check_orbit_partition(d4, orbits).ok);
    for (int r = 2; r <= 10; ++r) {
        const RootSystem d = RootSystem::make('D', r + 1);
        CHECK(check_orbit_partition(d, orbit_decomposition(d, sigma_C_D(r))).ok);
    }
    const RootSystem e6 = RootSystem::make('E', 6);
    CHECK(check_orbit_partition(e6, orbit_decomposition(e6, sigma_F4())).ok);
}

TEST_CASE("orbit tables for r = 10 and r = 9 match the transcribed fixtures") {
    const auto j = fixture("d_orbit_tables.json");
    REQUIRE(j.at("tables").size() == 2);
    for (const auto& t : j.at("tables")) {
        const CheckResult res = check_orbit_table_fixture(t);
        CAPTURE(res.summary());
        CHECK(res.ok);
    }
}

TEST_CASE("orbit lists on E6 and D4 match the transcribed fixtures") {
    const auto j = fixture("orbit_lists.json");
    CHECK(check_orbit_list_fixture(RootSystem::make('E', 6), sigma_F4(), j.at("E6").at("chains")).ok);
    CHECK(check_orbit_list_fixture(d4_central(), sigma_G2(), j.at("D4").at("chains")).ok);
}

TEST_CASE("a corrupted table entry is detected") {
    auto j = fixture("d_orbit_tables.json");
    auto& t = j["tables"][0];
    t["entries"][3]["text"] = "[1,2]";
    CHECK_FALSE(check_orbit_table_fixture(t).ok);
}

TEST_CASE("orbit lengths, recurrences") {
    for (int r = 2; r <= 10; ++r) {
        CHECK(check_D_orbit_lengths(r).ok);
        CHECK(check_alpha_recurrence(r).ok);
    }
}

TEST_CASE("alpha_i(u) for i in J_+ at even u is sigma^{-u/2}(-alpha_i)") {
    const int r = 5;
    const RootSystem rs = RootSystem::make('D', r + 1);
    const SigmaMap sigma = sigma_C_D(r);
    for (int i = 1; i <= r - 1; ++i) {
        if ((r + i) % 2 != 0) continue;
        for (int n = -2 * (r + 1); n < 0; n += 4)
            CHECK(alpha_of(Family::C, r, i, n) == sigma_power(rs, sigma, rs.neg_simple(i), -n / 4));
    }
}

TEST_CASE("G2: alpha_4(-2) = sigma(-alpha_4) = alpha_2 + alpha_3 + alpha_4") {
    const RootSystem rs = d4_central();
    CHECK(alpha_of(Family::G2, 2, 4, -6) == rs.parse("α_2+α_3+α_4"));
}

TEST_CASE("rho: {r+1} goes to [r, r+1]', bijection onto the Coxeter orbits") {
    for (int r = 3; r <= 5; ++r) {
        const RootSystem d = RootSystem::make('D', r + 1);
        const RootSystem a = RootSystem::make('A', 2 * r + 1);
        CHECK(rho(d, a, d.parse("{" + std::to_string(r + 1) + "}")) ==
              a.parse("[" + std::to_string(r) + "," + std::to_string(r + 1) + "]"));
        const CheckResult res = check_rho(r);
        CAPTURE(res.summary());
        CHECK(res.ok);
    }
}

TEST_CASE("rho conjugation at r = 4: r-1 pairs leave the positive roots") {
    const CheckResult res = check_rho(4);
    CHECK(res.ok);
    CHECK(res.metrics["pairs_leaving_positive"] == 3);
    CHECK(res.metrics["conjugation_pairs"].get<long>() > 0);
}

TEST_CASE("t-vectors at level 2") {
    for (int r = 2; r <= 6; ++r) {
        const CheckResult res = check_tvectors(run_tropical(Schedule({Family::C, r, 2})));
        CAPTURE(res.summary());
        CHECK(res.ok);
    }
    CHECK(check_tvectors(run_tropical(Schedule({Family::F4, 4, 2}))).ok);
    CHECK(check_tvectors(run_tropical(Schedule({Family::G2, 2, 2}))).ok);
}

TEST_CASE("root notation round trip") {
    const RootSystem d = RootSystem::make('D', 6);
    for (const auto& a : d.positive_roots()) CHECK(d.parse(d.format(a)) == a);
    const RootSystem e = RootSystem::make('E', 6);
    for (const auto& a : e.positive_roots()) CHECK(e.parse(e.format(a)) == a);
    CHECK(e.parse("$-\\alpha_{3}$") == e.neg_simple(3));
    CHECK(e.format(e.parse("[1,2^2,3^3,4^2,5^2,6]")) == "[1,2^2,3^3,4^2,5^2,6]");
    CHECK_THROWS_AS(d.parse("[1,9]"), RootError);
    CHECK_THROWS_AS(d.parse("[4,2]"), RootError);
}
