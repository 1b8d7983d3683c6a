#include <random>

#include "doctest.h"

#include "hslab/catalog.hpp"
#include "hslab/diffgeo.hpp"
#include "hslab/errors.hpp"

using namespace hsl;

namespace {

std::vector<ChartPoint> grid_of(const Immersion& imm, int count, std::uint64_t seed = 1) {
    GridSpec g;
    g.count = count;
    g.seed = seed;
    return sample_domain(imm, g);
}

}  // namespace

TEST_SUITE("diffgeo") {
    TEST_CASE("induced metric examples") {
        const Immersion torus = instantiate("cn.warped.a", {{"n", 2}, {"l", 2}, {"a1", 1.5}, {"a2", 1.5}});
        for (const auto& p : grid_of(torus, 20)) {
            const Eigen::MatrixXd g = geometry_at(torus, p).g;
            CHECK((g - Eigen::Matrix2d(Eigen::Vector2d(2.25, 2.25).asDiagonal())).norm() < 1e-12);
        }
        const double m = 2.0;
        const Immersion sech = instantiate("cp2.type2.sech", {{"m", m}});
        for (double x : {-0.2, 0.0, 0.1}) {
            const Eigen::MatrixXd g = geometry_at(sech, {x, -m * m * x}).g;
            CHECK(std::abs(g(0, 0) - m * m) < 1e-9);
            CHECK(std::abs(g(0, 1)) < 1e-9);
            CHECK(std::abs(g(1, 1) - 1) < 1e-9);
        }
    }

    TEST_CASE("Lagrangian residual") {
        const Immersion torus = instantiate("cn.warped.a", {{"n", 2}, {"l", 2}});
        const Jet2 jet = evaluate_jet(torus.par, {0.3, -0.8});
        CHECK(lagrangian_residual(jet, torus.ambient) < 1e-14);

        const MapFn holomorphic = [](const ChartPoint& p) {
            CVec v(2);
            v << cplx(p[0], p[1]), 0;
            return v;
        };
        const Jet2 bad = fd_jet(holomorphic, {0.2, 0.4});
        CHECK(lagrangian_residual(bad, AmbientModel::flat(2)) == doctest::Approx(1.0).epsilon(1e-8));
    }

    TEST_CASE("totally geodesic real projective space") {
        const Immersion rp3 = instantiate("cp3.nullity.1", {});
        for (const auto& p : grid_of(rp3, 30)) {
            const GeometryAtPoint geom = geometry_at(rp3, p);
            CHECK(h_norm(geom) < 1e-10);
            CHECK(mean_curvature(geom).norm() < 1e-10);
            CHECK(relative_nullity(geom) == 3);
        }
    }

    TEST_CASE("flat warped family: pattern, mean curvature, nullity") {
        for (int n = 1; n <= 4; ++n) {
            for (int l = 1; l <= n; ++l) {
                ParamSet p{{"n", double(n)}, {"l", double(l)}};
                for (int j = 1; j <= l; ++j) p.set(indexed("a", j), 0.5 + 0.3 * j);
                const Immersion imm = instantiate("cn.warped.a", p);
                const auto adapted = imm.family->adapted(imm.params);
                double inv_sq = 0;
                for (int j = 1; j <= l; ++j) inv_sq += 1 / std::pow(0.5 + 0.3 * j, 2);
                CAPTURE(n);
                CAPTURE(l);
                for (const auto& x : grid_of(imm, 10)) {
                    const GeometryAtPoint geom = geometry_at(imm, x);
                    CHECK(pattern_residual(geom, adapted) < 1e-10);
                    CHECK(std::abs(mean_curvature(geom).norm() - std::sqrt(inv_sq) / n) < 1e-10);
                    CHECK(relative_nullity(geom) == n - l);
                    CVec trace = CVec::Zero(geom.H.size());
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) trace += geom.g_inv(j, k) * geom.hess_normal(j, k);
                    CHECK((trace - double(n) * geom.H).norm() < 1e-10);
                }
            }
        }
    }

    TEST_CASE("projective warped family, paired transcription") {
        const Immersion imm = instantiate("cpn.warped.a", {}, "paired-components");
        const auto adapted = imm.family->adapted(imm.params);
        for (const auto& p : grid_of(imm, 20)) {
            const GeometryAtPoint geom = geometry_at(imm, p);
            CHECK(pattern_residual(geom, adapted) < 1e-5);
            CHECK(normality_residual(geom, imm.ambient) < 1e-8);
            CHECK(cubic_symmetry_residual(geom) < 1e-6);
            CHECK(sectional_curvature_residual(imm, p).value() < 1e-3);
        }
    }

    TEST_CASE("Gauss equation on lifts") {
        for (const char* id : {"cp2.type2.sech", "ch2.type2.a", "ch2.type1.ii", "cp2.type1"}) {
            CAPTURE(id);
            const Immersion imm = instantiate(id, {});
            for (const auto& p : grid_of(imm, 10)) {
                const CurvatureResidual r = sectional_curvature_residual(imm, p);
                CHECK(r.gauss < 1e-3);
                CHECK(codazzi_residual(imm, p) < 1e-3);
            }
        }
    }

    TEST_CASE("negative control: divergence of JH") {
        const Immersion imm = instantiate("control.graph", {});
        CHECK(div_jh(imm, {0.5, 0.0}) == doctest::Approx(0.75).epsilon(1e-4));
        for (double x : {-0.6, 0.2, 0.7}) CHECK(div_jh(imm, {x, 0.3}) == doctest::Approx(12 * x / std::pow(1 + 4 * x * x, 3)).epsilon(1e-4));
        const Immersion stationary = instantiate("cn.warped.a", {});
        for (const auto& p : grid_of(stationary, 10)) CHECK(std::abs(div_jh(stationary, p)) < 1e-6);
    }

    TEST_CASE("degenerate metric is reported") {
        const MapFn flat_line = [](const ChartPoint& p) {
            CVec v(2);
            v << cplx(p[0] + p[1], 0), 0;
            return v;
        };
        CHECK_THROWS_AS(second_fundamental_form(fd_jet(flat_line, {0.1, 0.2}), AmbientModel::flat(2)), DegeneracyError);
    }

    TEST_CASE("first variation of volume") {
        const Immersion stationary = instantiate("cn.warped.a", {{"n", 2}, {"l", 1}, {"a1", 1.3}});
        Bump bump;
        bump.center = {0.1, -0.2};
        bump.radius = 0.6;
        bump.amplitude = 0.0;
        CHECK(std::abs(first_variation(stationary, bump).dvol_dt) < 1e-12);

        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> c(-0.8, 0.8), r(0.3, 0.8), a(-2, 2);
        for (int trial = 0; trial < 5; ++trial) {
            bump.center = {c(rng), c(rng)};
            bump.radius = r(rng);
            bump.amplitude = a(rng);
            const FirstVariation fv = first_variation(stationary, bump);
            CHECK(std::abs(fv.dvol_dt) < 1e-4 * fv.volume);
            CHECK(std::abs(fv.predicted) < 1e-4 * fv.volume);
        }

        const Immersion control = instantiate("control.graph", {});
        bump.center = {0.2, 0.1};
        bump.radius = 0.5;
        bump.amplitude = 2.0;
        const FirstVariation fv = first_variation(control, bump);
        CHECK(std::abs(fv.predicted) > 0.1);
        CHECK(std::abs(fv.dvol_dt - fv.predicted) < 0.05 * std::abs(fv.predicted));

        bump.center = {0.8, 0.0};
        CHECK_THROWS_AS(first_variation(control, bump), SupportError);
        bump.center = {0.0, 0.0};
        CHECK_THROWS_AS(first_variation(instantiate("cp2.type2.sech", {}), bump), UnsupportedModelError);
    }
}
