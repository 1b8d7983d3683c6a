#include "hslab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <Eigen/Dense>

#include "hslab/errors.hpp"

namespace hsl {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pole(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Lanczos approximation, g = 7, nine coefficients; valid for Re z >= 0.5.
cplx lanczos_gamma(cplx z) {
    static const double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    z -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

void SeriesPolicy::validate() const {
    if (!(cutoff > 0)) throw ConfigError("series cutoff must be positive");
    if (max_terms < 1) throw ConfigError("series needs at least one term");
}

cplx gamma_complex(cplx z) {
    if (is_pole(z)) throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    return lanczos_gamma(z);
}

cplx reciprocal_gamma(cplx z) {
    if (is_pole(z)) return 0.0;
    return 1.0 / gamma_complex(z);
}

SeriesValue bessel_j(cplx nu, cplx z, const SeriesPolicy& policy) {
    policy.validate();
    SeriesValue out;
    if (z == 0.0) {
        if (nu == 0.0) {
            out.value = 1.0;
            out.terms = 1;
            return out;
        }
        if (nu.real() > 0 || is_pole(nu)) {  // J_{-n} = (-1)^n J_n vanishes at 0 too
            out.value = 0.0;
            out.terms = 1;
            return out;
        }
        throw DomainError("J_nu(0) is undefined for Re nu <= 0, nu != 0");
    }
    const cplx half = z / 2.0;
    const cplx q = -half * half;
    const cplx prefactor = std::exp(nu * std::log(half));

    // first index whose Gamma factor is finite
    int j0 = 0;
    while (is_pole(nu + static_cast<double>(j0) + 1.0)) ++j0;
    cplx term = std::pow(q, j0) * reciprocal_gamma(nu + static_cast<double>(j0) + 1.0) / std::tgamma(j0 + 1.0);
    cplx sum = 0.0;
    int j = j0;
    for (; j < policy.max_terms; ++j) {
        sum += term;
        const cplx ratio = q / ((j + 1.0) * (nu + static_cast<double>(j) + 1.0));
        const cplx next = term * ratio;
        const double r = std::abs(ratio);
        if (std::abs(next) <= policy.cutoff * std::abs(sum) && r < 0.5) {
            out.value = prefactor * sum;
            const double tail = std::abs(next) / (1 - r);
            out.error_estimate = std::abs(prefactor) * (tail + std::numeric_limits<double>::epsilon() * std::abs(sum));
            out.terms = j + 1;
            return out;
        }
        term = next;
    }
    throw ConvergenceError("Bessel series did not converge within " + std::to_string(policy.max_terms) + " terms");
}

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw ConfigError("quadrature order must be positive");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) J(i, i - 1) = J(i - 1, i) = i / std::sqrt(4.0 * i * i - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    for (int i = 0; i < order; ++i) {
        rule.nodes.push_back(es.eigenvalues()[i]);
        rule.weights.push_back(2 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i));
    }
    return rule;
}

namespace {

cplx integrand(cplx nu, double t) {
    const double t2 = t * t;
    return t * std::polar(1.0, t2) * bessel_j(nu, t2).value;
}

struct Panel {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Panel& o) const {
        if (error != o.error) return error < o.error;
        return a > o.a;  // deterministic tie-break
    }
};

Panel kronrod(cplx nu, double a, double b) {
    static const double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                  0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                  0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                  0.207784955007898467600689403773245, 0.0};
    static const double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                  0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                  0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                  0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                 0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = integrand(nu, c);
    cplx k = wgk[7] * fc, g = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const cplx f1 = integrand(nu, c - h * xgk[i]), f2 = integrand(nu, c + h * xgk[i]);
        k += wgk[i] * (f1 + f2);
        if (i % 2 == 1) g += wg[i / 2] * (f1 + f2);
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadratureValue fresnel_bessel_integral(cplx nu, double a, double b, double tol, int max_intervals) {
    if (!(a >= 0) || !(b >= a)) throw DomainError("integration limits must satisfy 0 <= a <= b");
    if (!(tol > 0)) throw ConfigError("quadrature tolerance must be positive");
    QuadratureValue out;
    if (b == a) return out;
    const int initial = std::max(1, static_cast<int>(std::ceil((b - a) / 0.25)));
    std::priority_queue<Panel> queue;
    double total_error = 0;
    for (int i = 0; i < initial; ++i) {
        const Panel p = kronrod(nu, a + (b - a) * i / initial, a + (b - a) * (i + 1) / initial);
        total_error += p.error;
        queue.push(p);
    }
    while (total_error > tol) {
        if (static_cast<int>(queue.size()) >= max_intervals)
            throw QuadratureError("tolerance " + std::to_string(tol) + " not reached within " + std::to_string(max_intervals) +
                                  " subintervals");
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = kronrod(nu, worst.a, mid), right = kronrod(nu, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    // sum in position order so the result does not depend on heap layout
    std::vector<Panel> panels;
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const auto& p : panels) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    out.intervals = static_cast<int>(panels.size());
    return out;
}

QuadratureValue fresnel_bessel_integral(cplx nu, double r, double tol, int max_intervals) {
    if (!(r >= 0)) throw DomainError("upper limit must be non-negative");
    return fresnel_bessel_integral(nu, 0.0, r, tol, max_intervals);
}

cplx fresnel_bessel_composite(cplx nu, double r, int order, int uniform_panels, int graded_levels) {
    if (!(r >= 0)) throw DomainError("upper limit must be non-negative");
    if (r == 0) return 0.0;
    const QuadratureRule rule = gauss_legendre(order);
    auto panel = [&](double a, double b) {
        cplx s = 0;
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int i = 0; i < order; ++i) s += rule.weights[i] * integrand(nu, c + h * rule.nodes[i]);
        return s * h;
    };
    // [0, r/2] graded by halving, [r/2, r] uniform
    cplx total = 0;
    double hi = 0.5 * r;
    for (int level = 0; level < graded_levels; ++level) {
        total += panel(0.5 * hi, hi);
        hi *= 0.5;
    }
    for (int i = 0; i < uniform_panels; ++i)
        total += panel(0.5 * r + 0.5 * r * i / uniform_panels, 0.5 * r + 0.5 * r * (i + 1) / uniform_panels);
    return total;
}

}  // namespace hsl
