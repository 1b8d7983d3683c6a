#include <limits>
#include <random>

#include "doctest.h"
#include "json.hpp"

#include "hslab/errors.hpp"
#include "hslab/verify.hpp"

using namespace hsl;

namespace {

RunConfig config_for(std::vector<std::string> families) {
    RunConfig c;
    c.families = std::move(families);
    c.single_thread = true;
    return c;
}

CheckReport random_report(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    CheckReport r;
    r.family = "fam" + std::to_string(rng() % 100);
    r.paper_tag = "Item (" + std::to_string(rng() % 9) + ")";
    r.tier = "B";
    r.variant = "as-printed";
    r.rejected_variants = {"other fails metric"};
    r.params.set("m", u(rng));
    r.grid.seed = rng();
    r.grid.count = 17;
    r.grid.margin = 0.125;
    const double specials[3] = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::quiet_NaN()};
    for (int i = 0; i < 4; ++i) {
        Check c;
        c.name = "check" + std::to_string(i);
        c.max_residual = i == 3 ? specials[rng() % 3] : u(rng);
        c.rms_residual = u(rng);
        c.tolerance = 1e-6;
        c.pass = rng() % 2;
        c.expected_fail = i == 0;
        c.note = i == 1 ? "note" : "";
        r.checks.push_back(c);
    }
    r.discrepancy = "failing checks: check1";
    r.timestamp = "2026-01-01T00:00:00Z";
    return r;
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("Tier A families pass") {
        RunConfig c;
        c.tier = Tier::A;
        c.single_thread = true;
        const auto reports = run_verification(c);
        CHECK(reports.size() >= 15);
        for (const auto& r : reports) {
            CAPTURE(r.family);
            CHECK(r.passed());
            CHECK(r.tier == "A");
        }
        CHECK(exit_status(reports) == 0);
    }

    TEST_CASE("totally geodesic family has vanishing second fundamental form") {
        const auto reports = run_verification(config_for({"cp3.nullity.1"}));
        REQUIRE(reports.size() == 1);
        const Check* h = reports[0].find("h-norm");
        REQUIRE(h != nullptr);
        CHECK(h->max_residual < 1e-10);
        CHECK(reports[0].passed());
    }

    TEST_CASE("negative control fails only where it should") {
        const auto reports = run_verification(config_for({"control.graph"}));
        REQUIRE(reports.size() == 1);
        const Check* div = reports[0].find("div-jh");
        REQUIRE(div != nullptr);
        CHECK(div->expected_fail);
        CHECK_FALSE(div->pass);
        CHECK(div->max_residual > 1e-2);
        CHECK(reports[0].passed());
        CHECK(exit_status(reports) == 0);
    }

    TEST_CASE("exit status") {
        CHECK(emit_json({}, false) == "[]\n");
        CHECK(exit_status({}) == 0);
        auto reports = run_verification(config_for({"cn.warped.a"}));
        CHECK(exit_status(reports) == 0);
        reports[0].checks[0].pass = false;
        CHECK(exit_status(reports) == 1);
        reports[0].tier = "B";
        reports[0].discrepancy = "failing checks: " + reports[0].checks[0].name;
        CHECK(exit_status(reports) == 0);
    }

    TEST_CASE("report round trip") {
        std::mt19937_64 rng(21);
        std::vector<CheckReport> reports;
        for (int i = 0; i < 10; ++i) reports.push_back(random_report(rng));
        const auto back = parse_reports(emit_json(reports));
        REQUIRE(back.size() == reports.size());
        for (size_t i = 0; i < reports.size(); ++i) {
            CHECK(back[i] == reports[i]);
            const bool nan_back = std::isnan(back[i].checks[3].max_residual);
            CHECK(nan_back == std::isnan(reports[i].checks[3].max_residual));
        }
        CHECK_THROWS(parse_reports("{not json"));
    }

    TEST_CASE("runs are deterministic and independent of the worker count") {
        RunConfig c = config_for({"cp2.type2.sech", "ch2.type2.a", "cpn.warped.a", "control.graph"});
        c.draws = 1;
        const std::string serial = emit_json(run_verification(c), false);
        CHECK(serial == emit_json(run_verification(c), false));
        c.single_thread = false;
        c.workers = 4;
        CHECK(serial == emit_json(run_verification(c), false));
    }

    TEST_CASE("configuration errors") {
        CHECK_THROWS_AS(run_verification(config_for({"no.such.family"})), NotFoundError);
        CHECK_THROWS_AS(run_config_from_json(R"({"families": ["cn.warped.a"], "bogus": 1})"), ConfigError);
        CHECK_THROWS_AS(run_config_from_json(R"({"tol_profile": "strict"})"), ConfigError);
        CHECK_THROWS_AS(run_config_from_json(R"({"grid": {"count": 0}})"), ConfigError);
        CHECK_THROWS_AS(run_config_from_json("[1, 2"), ConfigError);
        RunConfig bad = config_for({"cp2.type2.sech"});
        bad.params["cp2.type2.sech"] = {{"m", 1.0}};
        CHECK_THROWS_AS(run_verification(bad), ConfigError);
        const RunConfig c = run_config_from_json(
            R"({"families": ["cp2.type2.sech"], "params": {"cp2.type2.sech": {"m": 3}}, "grid": {"count": 20, "seed": 4}, "draws": 2})");
        CHECK(c.families.size() == 1);
        CHECK(c.params.at("cp2.type2.sech").get("m") == 3.0);
        CHECK(c.grid.count == 20);
        CHECK(c.grid.seed == 4);
        CHECK(c.draws == 2);
    }

    TEST_CASE("tolerance profiles") {
        const Tolerances d = Tolerances::profile("default"), l = Tolerances::profile("loose");
        CHECK(d.get("quadric") == 1e-10);
        CHECK(d.get("lemma61 6.2") == 1e-9);
        CHECK(l.get("curvature") == doctest::Approx(10 * d.get("curvature")));
        CHECK(l.get("nullity") == d.get("nullity"));
        CHECK_THROWS_AS(d.get("unknown-check"), ConfigError);
    }

    TEST_CASE("untranscribable family carries a discrepancy note") {
        const auto reports = run_verification(config_for({"c2.bessel"}));
        REQUIRE(reports.size() == 1);
        CHECK_FALSE(reports[0].passed());
        CHECK_FALSE(reports[0].discrepancy.empty());
        CHECK(exit_status(reports) == 0);
    }

    TEST_CASE("per-family failures do not stop the run") {
        RunConfig c = config_for({"ch2.type2.a", "cn.warped.a"});
        c.grid.margin = 50;
        const auto reports = run_verification(c);
        REQUIRE(reports.size() == 2);
        CHECK_FALSE(reports[0].error.empty());
        CHECK(reports[1].error.empty());
        CHECK(reports[1].passed());
        CHECK(exit_status(reports) == 1);
    }

    TEST_CASE("twistor suite") {
        const auto reports = run_twistor_suite(200, 1);
        CHECK(reports.size() >= 15);
        for (const auto& r : reports) {
            CAPTURE(r.family);
            CHECK(r.passed());
        }
        CHECK_THROWS_AS(run_twistor_suite(10, 1, "nope"), NotFoundError);
    }
}
