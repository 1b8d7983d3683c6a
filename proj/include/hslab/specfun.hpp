#pragma once

#include <complex>
#include <vector>

namespace hsl {

using cplx = std::complex<double>;

struct SeriesPolicy {
    double cutoff = 1e-16;  // stop once a term is below cutoff * |partial sum| and terms are shrinking
    int max_terms = 200;

    void validate() const;
};

struct SeriesValue {
    cplx value;
    double error_estimate = 0.0;  // first dropped term (geometric tail) plus one rounding unit of the sum
    int terms = 0;
};

cplx gamma_complex(cplx z);
cplx reciprocal_gamma(cplx z);  // 1/Gamma, zero at the poles

// J_nu(z) by its power series, principal branch of (z/2)^nu.
SeriesValue bessel_j(cplx nu, cplx z, const SeriesPolicy& policy = {});

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int order);

struct QuadratureValue {
    cplx value;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Adaptive Gauss-Kronrod (7/15) quadrature of int_0^r t e^{i t^2} J_nu(t^2) dt to absolute tolerance tol.
QuadratureValue fresnel_bessel_integral(cplx nu, double r, double tol, int max_intervals = 1 << 14);
// Same integral between a and b.
QuadratureValue fresnel_bessel_integral(cplx nu, double a, double b, double tol, int max_intervals = 1 << 14);

// Fixed composite Gauss-Legendre rule on a mesh graded geometrically toward 0.
cplx fresnel_bessel_composite(cplx nu, double r, int order = 20, int uniform_panels = 40, int graded_levels = 45);

}  // namespace hsl
