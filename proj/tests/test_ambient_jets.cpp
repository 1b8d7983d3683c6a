#include <random>

#include "doctest.h"

#include "hslab/ambient.hpp"
#include "hslab/catalog.hpp"
#include "hslab/errors.hpp"
#include "hslab/jets.hpp"

using namespace hsl;

namespace {

CVec random_cvec(std::mt19937_64& rng, int m) {
    std::normal_distribution<double> d;
    CVec v(m);
    for (int a = 0; a < m; ++a) v[a] = cplx(d(rng), d(rng));
    return v;
}

// random point of the quadric <z,z> = sigma
CVec random_quadric_point(std::mt19937_64& rng, const AmbientModel& model) {
    CVec z = random_cvec(rng, model.m);
    if (model.kind == AmbientKind::hyperbolic) {
        z[0] = 0;
        const double s = z.squaredNorm();
        z[0] = std::polar(std::sqrt(1 + s), 0.3);
    } else {
        z /= z.norm();
    }
    return z;
}

}  // namespace

TEST_SUITE("ambient") {
    TEST_CASE("hermitian form examples") {
        const Signature plus = Signature::euclidean(2), minus = Signature::lorentzian(2);
        CHECK(herm_inner(CVector(CVec::Unit(2, 0), plus), CVector(CVec::Unit(2, 0), plus)) == cplx(1, 0));
        CVec ie(2);
        ie << I, 0;
        CHECK(herm_inner(CVector(ie, plus), CVector(CVec::Unit(2, 0), plus)) == I);
        CHECK(herm_inner(CVector(CVec::Unit(2, 0), minus), CVector(CVec::Unit(2, 0), minus)) == cplx(-1, 0));
    }

    TEST_CASE("mismatched signatures are rejected") {
        CHECK_THROWS_AS(herm_inner(CVector(CVec::Unit(2, 0), Signature::euclidean(2)),
                                   CVector(CVec::Unit(3, 0), Signature::euclidean(3))),
                        DimensionError);
        CHECK_THROWS_AS(CVector(CVec::Unit(3, 0), Signature::euclidean(2)), DimensionError);
    }

    TEST_CASE("conjugate symmetry and the Kaehler form") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const Signature s = trial % 2 ? Signature::lorentzian(4) : Signature::euclidean(4);
            const CVector u(random_cvec(rng, 4), s), v(random_cvec(rng, 4), s);
            CHECK(std::abs(herm_inner(u, v) - std::conj(herm_inner(v, u))) < 1e-13);
            CHECK(std::abs(kaehler_form(u, u)) < 1e-13);
            CHECK(std::abs(kaehler_form(u, v) + kaehler_form(v, u)) < 1e-13);
        }
    }

    TEST_CASE("quadric residual examples") {
        const AmbientModel sphere = AmbientModel::spherical(1), ads = AmbientModel::hyperbolic(2);
        CHECK(quadric_residual(CVec(CVec::Unit(2, 0)), sphere) == 0.0);
        const double t = 0.8;
        CVec z(3);
        z << std::cosh(t), std::sinh(t), 0;
        CHECK(quadric_residual(z, ads) < 1e-14);
        CHECK_THROWS_AS(quadric_residual(z, AmbientModel::flat(3)), UnsupportedModelError);
    }

    TEST_CASE("fiber action leaves the quadric residual unchanged") {
        std::mt19937_64 rng(3);
        for (const auto& model : {AmbientModel::spherical(3), AmbientModel::hyperbolic(3)}) {
            for (int trial = 0; trial < 20; ++trial) {
                const CVec z = random_cvec(rng, model.m) * 0.7;
                const double phi = 0.37 * trial;
                CHECK(std::abs(quadric_residual(z, model) - quadric_residual(CVec(std::polar(1.0, phi) * z), model)) < 1e-13);
            }
        }
    }

    TEST_CASE("Legendrian Clifford torus and the vertical-direction detector") {
        const AmbientModel model = AmbientModel::spherical(2);
        const double x = 0.4, y = -1.1, r = 1 / std::sqrt(3.0);
        CVec z(3), dx(3), dy(3);
        z << r * std::polar(1.0, x), r * std::polar(1.0, y), r * std::polar(1.0, -x - y);
        dx << I * z[0], 0, -I * z[2];
        dy << 0, I * z[1], -I * z[2];
        const Signature& s = model.signature;
        auto [c0, i0] = legendrian_residuals(CVector(z, s), {CVector(dx, s), CVector(dy, s)}, model);
        CHECK(quadric_residual(z, model) < 1e-15);
        CHECK(c0 < 1e-15);
        CHECK(i0 < 1e-15);

        // the product torus (e^{ix}, e^{iy}) / sqrt 2 is not horizontal: d_x + d_y = iz
        CVec w(2), wx(2);
        w << std::polar(1.0, x) / std::sqrt(2.0), std::polar(1.0, y) / std::sqrt(2.0);
        wx << I * w[0], 0;
        CHECK(contact_residual(w, {wx}, AmbientModel::spherical(1)) == doctest::Approx(0.5));

        const double t = 0.25;
        const CVec bent = dx + t * I * z;
        auto [c1, i1] = legendrian_residuals(CVector(z, s), {CVector(bent, s), CVector(dy, s)}, model);
        CHECK(c1 == doctest::Approx(t * std::abs(herm(z, z, model))).epsilon(1e-12));
        (void)i1;
    }

    TEST_CASE("horizontal projection") {
        std::mt19937_64 rng(11);
        for (const auto& model : {AmbientModel::spherical(3), AmbientModel::hyperbolic(3)}) {
            const CVec z = random_quadric_point(rng, model);
            CHECK(horizontal_project(z, z, model).norm() < 1e-13);
            CHECK(horizontal_project(CVec(I * z), z, model).norm() < 1e-13);
            for (int trial = 0; trial < 20; ++trial) {
                const CVec v = random_cvec(rng, model.m);
                const CVec p = horizontal_project(v, z, model);
                CHECK((horizontal_project(p, z, model) - p).norm() < 1e-12);
                CHECK(std::abs(herm(p, z, model)) < 1e-12);
                const CVec w = random_cvec(rng, model.m);
                const CVec lin = horizontal_project(CVec(v + 2.5 * w), z, model) - p - 2.5 * horizontal_project(w, z, model);
                CHECK(lin.norm() < 1e-12);
            }
        }
    }
}

TEST_SUITE("jets") {
    TEST_CASE("single circle factor: frozen value, gradient and Hessian") {
        const Immersion imm = instantiate("cn.warped.a", {{"n", 1}, {"l", 1}, {"a1", 2}});
        for (JetMode mode : {JetMode::prefer_analytic, JetMode::finite_difference}) {
            const Jet2 jet = evaluate_jet(imm.par, {0.0}, kDefaultStep, mode);
            CHECK(std::abs(jet.value[0] - cplx(2, 0)) < 1e-12);
            CHECK(std::abs(jet.grad[0][0] - cplx(0, 2)) < 1e-10);
            CHECK(std::abs(jet.hess(0, 0)[0] - cplx(-2, 0)) < 1e-8);
        }
    }

    TEST_CASE("finite differences agree with registered analytic derivatives") {
        GridSpec grid;
        grid.count = 10;
        for (const auto& f : registry()) {
            if (!f.variants.front().make_jet) continue;
            const Immersion imm = instantiate(f, f.smoke_params());
            CAPTURE(f.id);
            for (const auto& p : sample_domain(imm, grid)) {
                const Jet2 a = evaluate_jet(imm.par, p, kDefaultStep, JetMode::prefer_analytic);
                const Jet2 d = evaluate_jet(imm.par, p, kDefaultStep, JetMode::finite_difference);
                double grad_dev = 0;
                for (int j = 0; j < a.n; ++j) grad_dev = std::max(grad_dev, (a.grad[j] - d.grad[j]).cwiseAbs().maxCoeff());
                CHECK(grad_dev < 1e-9);
                CHECK(max_deviation(a, d) < 1e-6);
            }
        }
    }

    TEST_CASE("halving the step shrinks the difference error at least eightfold") {
        const Immersion imm = instantiate("cn.warped.b", {});
        const ChartPoint p = {0.3, 0.6};
        const Jet2 exact = evaluate_jet(imm.par, p, kDefaultStep, JetMode::prefer_analytic);
        const double coarse = max_deviation(exact, fd_jet(imm.par.map, p, 0.08));
        const double fine = max_deviation(exact, fd_jet(imm.par.map, p, 0.04));
        CHECK(coarse > 0);
        CHECK(coarse / fine >= 8.0);
    }

    TEST_CASE("constant map has vanishing derivatives") {
        const MapFn constant = [](const ChartPoint&) {
            CVec v(2);
            v << cplx(0.3, 1.0), cplx(-2.0, 0.5);
            return v;
        };
        const Jet2 jet = fd_jet(constant, {0.1, 0.7});
        for (int j = 0; j < 2; ++j) {
            CHECK(jet.grad[j].norm() < 1e-12);
            for (int k = 0; k < 2; ++k) CHECK(jet.hess(j, k).norm() < 1e-12);
        }
    }

    TEST_CASE("Hessian storage is symmetric by construction") {
        const Jet2 jet = fd_jet([](const ChartPoint& x) {
            CVec v(1);
            v << std::exp(cplx(x[0] * x[1], x[1] * x[1] * x[2]));
            return v;
        }, {0.2, 0.4, -0.3});
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(&jet.hess(j, k) == &jet.hess(k, j));
    }

    TEST_CASE("forward-mode arithmetic matches difference quotients") {
        auto expr = [](const auto& x, const auto& y) {
            using std::exp, std::sin, std::cosh, std::sqrt, std::atan, std::log, std::tanh, std::tan;
            return exp(x * y) * sin(x) / cosh(y) + sqrt(x * x + 1.0) * atan(y) - log(x + 2.0) * tanh(x * y) + tan(y * 0.5);
        };
        const double x0 = 0.3, y0 = -0.6;
        const Taylor2 t = expr(Taylor2::variable(x0, 0, 2), Taylor2::variable(y0, 1, 2));
        const Jet2 jet = fd_jet([&](const ChartPoint& p) {
            CVec v(1);
            v << expr(cplx(p[0]), cplx(p[1]));
            return v;
        }, {x0, y0});
        CHECK(std::abs(t.v - jet.value[0]) < 1e-14);
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(t.g[j] - jet.grad[j][0]) < 1e-9);
            for (int k = 0; k < 2; ++k) CHECK(std::abs(t.h(j, k) - jet.hess(j, k)[0]) < 1e-6);
        }
    }

    TEST_CASE("jets refuse stencils that reach a singular locus") {
        const Immersion imm = instantiate("ch2.type2.a", {});
        const double m = imm.params.get("m");
        CHECK_THROWS_AS(evaluate_jet(imm.par, {0.5, -m * m * 0.5 + 1e-4}), DomainError);
        CHECK_THROWS_AS(evaluate_jet(imm.par, {0.5}), DimensionError);
    }
}
