#include "doctest.h"

#include "hslab/catalog.hpp"
#include "hslab/errors.hpp"
#include "hslab/twistor.hpp"

using namespace hsl;

namespace {

double max_over(const TwistorSolution& sol, const std::string& eq, int count = 1000) {
    double r = 0;
    for (const auto& p : solution_grid(sol, count, 1)) r = std::max(r, equation_residual(sol, eq, p));
    return r;
}

// transformed pairs are sampled away from their poles
double max_away(const TwistorSolution& sol, const std::string& eq, int count = 200) {
    GridSpec g;
    g.count = count;
    g.margin = 0.05;
    double r = 0;
    for (const auto& p : sample_domain(sol.domain, g)) r = std::max(r, equation_residual(sol, eq, p));
    return r;
}

}  // namespace

TEST_SUITE("twistor") {
    TEST_CASE("single function and the degenerate cases of the stationarity equation") {
        const TwistorSolution l1 = make_solution("l1");
        CHECK(l1.l == 1);
        CHECK(max_over(l1, "3.5") == 0.0);
        CHECK(max_over(make_solution("cor3.1"), "3.8") < 1e-12);
        CHECK(max_over(make_solution("prop3.3"), "3.8") < 1e-12);
        CHECK(max_over(make_solution("6.11"), "3.8") < 1e-9);
    }

    TEST_CASE("Gauss curvature equation for the registered examples") {
        CHECK(max_over(make_solution("typeI.sech"), "6.3") < 1e-9);
        CHECK(max_over(make_solution("typeI.exp"), "6.3") < 1e-12);
        for (const char* id : {"typeI.sec", "typeI.csch", "typeI.rational", "6.11", "6.17", "6.18", "6.19"}) {
            CAPTURE(id);
            CHECK(max_over(make_solution(id), "6.3") < 1e-9);
        }
    }

    TEST_CASE("flat solutions satisfy the full system") {
        CHECK(full_system_residual(make_solution("8.1"), solution_grid(make_solution("8.1"), 1000, 1)).max() < 1e-12);
        const TwistorSolution s2 = make_solution("8.2", {{"m", 2.0}});
        CHECK(full_system_residual(s2, solution_grid(s2, 1000, 1)).max() < 1e-9);
        const TwistorSolution s3 = make_solution("8.3", {{"a", 1.0}, {"c", 1.0}});
        const auto grid = solution_grid(s3, 1000, 1);
        for (const auto& p : grid) {
            CHECK(p[0] > 0);
            CHECK(p[1] < 0);
        }
        CHECK(full_system_residual(s3, grid).max() < 1e-9);
    }

    TEST_CASE("every registered solution satisfies its declared equations") {
        for (const auto& info : solution_registry()) {
            CAPTURE(info.id);
            const TwistorSolution sol = make_solution(info.id);
            CHECK(full_system_residual(sol, solution_grid(sol, 1000, 3), sol.equations).max() < 1e-8);
        }
    }

    TEST_CASE("first scaling transform preserves the stationarity system") {
        for (const auto& info : solution_registry()) {
            const TwistorSolution sol = make_solution(info.id);
            if (sol.l != 2 || sol.dim != 2) continue;
            CAPTURE(info.id);
            const TwistorSolution t = scale_transform(sol, 1.7, 0.6, ScaleMode::lemma61);
            for (const auto& eq : t.equations) CHECK(max_away(t, eq) < 1e-9);
        }
    }

    TEST_CASE("second scaling transform reproduces the sech example") {
        const double c = 0.8, m = 2.5;
        const double c1 = c * std::sqrt(2.0) / std::sqrt(1 + m * m);
        const TwistorSolution built = scale_transform(make_solution("typeI.sech", {{"c1", c1}}), m, 0, ScaleMode::lemma62);
        const TwistorSolution direct = make_solution("6.11", {{"c", c}, {"m", m}});
        for (const auto& p : solution_grid(built, 200, 4)) {
            const auto a = built.eval(p), b = direct.eval(p);
            for (int i = 0; i < 2; ++i) {
                CHECK(std::abs(a[i].v - b[i].v) < 1e-12);
                CHECK((a[i].g - b[i].g).norm() < 1e-12);
                CHECK((a[i].h - b[i].h).norm() < 1e-11);
            }
        }
        for (int sign : {1, -1}) {
            const TwistorSolution t = scale_transform(make_solution("typeI.exp"), m, 0, ScaleMode::lemma62, sign);
            for (const char* eq : {"6.1", "6.2"}) CHECK(max_away(t, eq) < 1e-9);
        }
        CHECK_THROWS_AS(scale_transform(make_solution("typeI.sech"), 1.0, 0, ScaleMode::lemma62), AdmissibilityError);
        CHECK_THROWS_AS(scale_transform(make_solution("6.11"), 2.0, 0, ScaleMode::lemma62), AdmissibilityError);
    }

    TEST_CASE("lift systems of the traveling-wave surfaces") {
        const Immersion sech = instantiate("cp2.type2.sech", {{"m", 2.0}});
        GridSpec grid;
        grid.count = 100;
        for (const auto& p : sample_domain(sech, grid))
            CHECK(lift_system_residual(sech.family->lift_system, evaluate_jet(sech.par, p), p, sech.params) < 1e-5);

        const Immersion flat = instantiate("c2.type2.exp", {});
        for (const auto& p : sample_domain(flat, grid))
            CHECK(lift_system_residual(flat.family->lift_system, evaluate_jet(flat.par, p), p, flat.params) < 1e-6);

        const double m = 2.0;
        const Jet2 constant = fd_jet([](const ChartPoint&) {
            CVec v(3);
            v << 1, 0, 0;
            return v;
        }, {0.3, 0.1});
        const double u = (m * m * 0.3 + 0.1) / std::sqrt(1 + m * m);
        CHECK(sech_lift_system_residual(constant, {0.3, 0.1}, m) == doctest::Approx(m * m / std::pow(std::cosh(u), 2)));
        CHECK_THROWS_AS(lift_system_residual(LiftSystem::none, constant, {0.3, 0.1}, {}), ConfigError);
    }

    TEST_CASE("type I classification") {
        for (const char* id : {"typeI.sech", "typeI.exp", "typeI.sec", "8.1"}) {
            const TwistorSolution s = make_solution(id);
            CHECK(type1_classifier(s, solution_grid(s, 100, 1)));
        }
        for (const char* id : {"6.11", "6.13", "8.2", "8.3"}) {
            const TwistorSolution s = make_solution(id);
            CHECK_FALSE(type1_classifier(s, solution_grid(s, 100, 1)));
        }
    }

    TEST_CASE("analytic partials agree with differences") {
        for (const auto& info : solution_registry()) {
            CAPTURE(info.id);
            const TwistorSolution sol = make_solution(info.id);
            GridSpec g;
            g.count = 100;
            g.margin = 0.05;
            for (const auto& p : sample_domain(sol.domain, g)) CHECK(partials_fd_deviation(sol, p) < 1e-8);
        }
    }

    TEST_CASE("bad requests") {
        CHECK_THROWS_AS(make_solution("nope"), NotFoundError);
        CHECK_THROWS_AS(make_solution("6.11", {{"q", 1.0}}), ConfigError);
        CHECK_THROWS_AS(make_solution("6.11", {{"m", 1.0}}), AdmissibilityError);
        CHECK_THROWS_AS(equation_residual(make_solution("6.11"), "9.9", {0.1, 0.1}), ConfigError);
        CHECK_THROWS_AS(curvature_residual(make_solution("l1"), {0.1, 0.1}), DimensionError);
    }
}
