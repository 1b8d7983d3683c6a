#include <numbers>
#include <random>

#include "doctest.h"

#include "hslab/errors.hpp"
#include "hslab/specfun.hpp"

using namespace hsl;

namespace {

constexpr double kPi = std::numbers::pi;

// reference values computed with 40 significant digits
const cplx kGammaOnePlusI{0.4980156681183560427, -0.1549498283018106851};
const cplx kJNegHalfComplex[3] = {{1.668024357543677958, -0.2052793348058140247},
                                  {-0.2768184908062393765, -0.5392385228285630215},
                                  {0.1251702739190329189, 0.3218715663210194498}};
const cplx kFresnelHalf{0.1967486804353188556, 0.4834204527564032358};
const cplx kFresnelOnePlusI{0.2451092600151267420, 0.2728375619296906613};

}  // namespace

TEST_SUITE("specfun") {
    TEST_CASE("Gamma values") {
        CHECK(std::abs(gamma_complex(1.0) - 1.0) < 1e-14);
        CHECK(std::abs(gamma_complex(0.5) - std::sqrt(kPi)) < 1e-14);
        CHECK(std::abs(gamma_complex({1, 1}) - kGammaOnePlusI) < 1e-14);
        CHECK(std::abs(gamma_complex(-0.5) + 2 * std::sqrt(kPi)) < 1e-13);
        for (int n = 1; n < 15; ++n) CHECK(std::abs(gamma_complex(n) - std::tgamma(n)) < 1e-13 * std::tgamma(n));
    }

    TEST_CASE("Gamma recurrence and reflection") {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> re(-4, 4), im(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            const cplx z{re(rng), im(rng)};
            const cplx g = gamma_complex(z);
            CHECK(std::abs(gamma_complex(z + 1.0) - z * g) < 1e-12 * std::max(1.0, std::abs(z * g)));
            const cplx refl = g * gamma_complex(1.0 - z) * std::sin(kPi * z) / kPi;
            CHECK(std::abs(refl - 1.0) < 1e-10);
        }
    }

    TEST_CASE("Gamma poles") {
        for (double p : {0.0, -1.0, -7.0}) {
            CHECK_THROWS_AS(gamma_complex(p), PoleError);
            CHECK(reciprocal_gamma(p) == 0.0);
        }
    }

    TEST_CASE("Bessel series") {
        CHECK(bessel_j(0.0, 0.0).value == 1.0);
        CHECK(bessel_j(2.0, 0.0).value == 0.0);
        CHECK(bessel_j(-1.0, 0.0).value == 0.0);
        CHECK_THROWS_AS(bessel_j({0, 1}, 0.0), DomainError);
        for (double z : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const cplx exact = std::sqrt(2 / (kPi * z)) * std::sin(z);
            CHECK(std::abs(bessel_j(0.5, z).value - exact) < 1e-10);
        }
        const double zs[3] = {0.5, 2.0, 5.0};
        for (int i = 0; i < 3; ++i) {
            const SeriesValue v = bessel_j({-0.5, -0.5}, zs[i]);
            CHECK(v.terms < 60);
            CHECK(std::abs(v.value - kJNegHalfComplex[i]) < 1e-14 * std::max(1.0, std::abs(kJNegHalfComplex[i])));
        }
        // integer order: J_{-n} = (-1)^n J_n
        for (double z : {0.7, 3.1}) CHECK(std::abs(bessel_j(-3.0, z).value + bessel_j(3.0, z).value) < 1e-14);
    }

    TEST_CASE("Bessel error estimate bounds the truncation change") {
        SeriesPolicy coarse;
        coarse.cutoff = 1e-6;
        for (double z : {0.3, 1.5, 4.0}) {
            const SeriesValue c = bessel_j({0.3, 0.8}, z, coarse), f = bessel_j({0.3, 0.8}, z);
            CHECK(c.terms <= f.terms);
            CHECK(std::abs(c.value - f.value) <= c.error_estimate + f.error_estimate);
        }
        SeriesPolicy tiny;
        tiny.max_terms = 3;
        CHECK_THROWS_AS(bessel_j(0.5, 20.0, tiny), ConvergenceError);
        tiny.cutoff = 0;
        CHECK_THROWS_AS(bessel_j(0.5, 1.0, tiny), ConfigError);
    }

    TEST_CASE("Gauss-Legendre rule") {
        const QuadratureRule r = gauss_legendre(10);
        double w = 0, x4 = 0;
        for (int i = 0; i < 10; ++i) {
            w += r.weights[i];
            x4 += r.weights[i] * std::pow(r.nodes[i], 4);
        }
        CHECK(std::abs(w - 2) < 1e-14);
        CHECK(std::abs(x4 - 0.4) < 1e-14);
    }

    TEST_CASE("Fresnel-Bessel integral") {
        CHECK(fresnel_bessel_integral(0.5, 0.0, 1e-10).value == 0.0);
        CHECK(std::abs(fresnel_bessel_integral(0.5, 1.5, 1e-12).value - kFresnelHalf) < 1e-11);
        CHECK(std::abs(fresnel_bessel_integral({1, 1}, 1.5, 1e-12).value - kFresnelOnePlusI) < 1e-11);

        const cplx nu{-0.5, -0.5};
        const QuadratureValue loose = fresnel_bessel_integral(nu, 1.5, 1e-6), tight = fresnel_bessel_integral(nu, 1.5, 1e-11);
        CHECK(std::abs(loose.value - tight.value) < 2e-6);
        CHECK(tight.intervals >= loose.intervals);

        const double tol = 1e-10;
        CHECK(std::abs(fresnel_bessel_integral(nu, 1.5, tol).value - fresnel_bessel_composite(nu, 1.5)) < 2 * tol);

        const cplx whole = fresnel_bessel_integral(nu, 0.0, 1.5, 1e-12).value;
        const cplx parts = fresnel_bessel_integral(nu, 0.0, 0.9, 1e-12).value + fresnel_bessel_integral(nu, 0.9, 1.5, 1e-12).value;
        CHECK(std::abs(whole - parts) < 1e-11);

        CHECK_THROWS_AS(fresnel_bessel_integral(nu, 3.0, 1e-14, 4), QuadratureError);
        CHECK_THROWS_AS(fresnel_bessel_integral(nu, -1.0, 1e-8), DomainError);
        CHECK_THROWS_AS(fresnel_bessel_integral(nu, 1.0, 0.0), ConfigError);
    }
}
