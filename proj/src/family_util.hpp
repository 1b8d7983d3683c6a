#pragma once

// Shared pieces for the family definitions: curve blocks, sphere coordinates, domain helpers.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "hslab/catalog.hpp"
#include "hslab/errors.hpp"

namespace hsl::fam {

using std::cos;
using std::cosh;
using std::exp;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

inline constexpr double kPi = std::numbers::pi;

inline double sech(double u) { return 1.0 / std::cosh(u); }
inline double csch(double u) { return 1.0 / std::sinh(u); }
inline double sec(double u) { return 1.0 / std::cos(u); }

// e^{i t}
inline cplx cis(double t) { return std::polar(1.0, t); }

// A pair of complex numbers forming one factor of a product immersion.
struct Pair {
    cplx first;
    cplx second;
};

// Legendrian circle-type curve in S^3 with speed a:
// (2a e^{ix/2} sin(sx/2)/s, e^{ix/2}(cos(sx/2) - i sin(sx/2)/s)), s = sqrt(1+4a^2).
inline Pair sphere_curve(double a, double x) {
    const double s = sqrt(1 + 4 * a * a);
    const cplx e = cis(x / 2);
    return {2 * a * e * sin(s * x / 2) / s, e * (cos(s * x / 2) - I * sin(s * x / 2) / s)};
}

// Timelike curves in the anti-de Sitter 3-space (first entry timelike), speed a.
inline Pair elliptic_curve(double a, double x) {  // 4a^2 < 1
    const double t = sqrt(1 - 4 * a * a);
    const cplx e = cis(x / 2);
    return {e * (cos(t * x / 2) - I * sin(t * x / 2) / t), 2 * a * e * sin(t * x / 2) / t};
}

inline Pair hyperbolic_curve(double a, double x) {  // 4a^2 > 1
    const double t = sqrt(4 * a * a - 1);
    const cplx e = cis(x / 2);
    return {e * (cosh(t * x / 2) - I * sinh(t * x / 2) / t), 2 * a * e * sinh(t * x / 2) / t};
}

inline Pair parabolic_curve(double x) {  // a = 1/2
    const cplx e = cis(x / 2);
    return {e * (1.0 - I * x / 2.0), e * (x / 2)};
}

// Standard coordinates on S^N: c_r = sin(phi_r) prod_{q<r} cos(phi_q) for r < N, c_N = prod cos.
inline std::vector<double> sphere_components(const double* phi, int N) {
    std::vector<double> c(N + 1);
    double prod = 1.0;
    for (int r = 0; r < N; ++r) {
        c[r] = sin(phi[r]) * prod;
        prod *= cos(phi[r]);
    }
    c[N] = prod;
    return c;
}

// Metric of S^N in those coordinates: d phi_0^2 + cos^2 phi_0 d phi_1^2 + ...
inline std::vector<double> sphere_metric_diagonal(const double* phi, int N) {
    std::vector<double> g(N);
    double prod = 1.0;
    for (int r = 0; r < N; ++r) {
        g[r] = prod;
        prod *= cos(phi[r]) * cos(phi[r]);
    }
    return g;
}

// Appends A_j c_j for every curve, then B_j c_j, then the remaining bare components c_j, all times scale.
inline void append_twisted_sphere(std::vector<cplx>& out, const std::vector<Pair>& curves, const std::vector<double>& c,
                                  double scale) {
    const size_t K = curves.size();
    if (K > c.size()) throw DimensionError("more curve factors than sphere components");
    for (size_t j = 0; j < K; ++j) out.push_back(curves[j].first * c[j] * scale);
    for (size_t j = 0; j < K; ++j) out.push_back(curves[j].second * c[j] * scale);
    for (size_t j = K; j < c.size(); ++j) out.push_back(c[j] * scale);
}

// Open quarter-circle condition 0 < phi < pi/2 for every angle coordinate in [first, last).
inline void add_angle_constraints(Domain& d, int first, int last) {
    for (int r = first; r < last; ++r)
        d.positive("0 < x_" + std::to_string(r + 1) + " < pi/2", [r](const ChartPoint& x) { return std::sin(2 * x[r]); });
}

inline CVec to_cvec(const std::vector<cplx>& v) {
    CVec out(static_cast<Eigen::Index>(v.size()));
    for (size_t a = 0; a < v.size(); ++a) out[static_cast<Eigen::Index>(a)] = v[a];
    return out;
}

inline ParamSpec real_param(std::string name, std::string constraint, double smoke, double lo, double hi) {
    return ParamSpec{std::move(name), std::move(constraint), smoke, lo, hi, false};
}

inline ParamSpec int_param(std::string name, std::string constraint, double smoke) {
    return ParamSpec{std::move(name), std::move(constraint), smoke, smoke, smoke, true};
}

inline Variant variant(std::string name, std::string note, std::function<MapFn(const ParamSet&)> make) {
    return Variant{std::move(name), std::move(note), std::move(make), {}};
}

// Variant whose evaluator is a generic lambda over the scalar type, so the same closed form
// yields both values (cplx) and exact jets (Taylor2).
template <class Make>
Variant exact_variant(std::string name, std::string note, Make make) {
    Variant v;
    v.name = std::move(name);
    v.note = std::move(note);
    v.make_map = [make](const ParamSet& p) -> MapFn {
        auto f = make(p);
        return [f](const ChartPoint& x) {
            std::vector<cplx> in(x.begin(), x.end());
            return to_cvec(f(in));
        };
    };
    v.make_jet = [make](const ParamSet& p) -> JetFn {
        auto f = make(p);
        return [f](const ChartPoint& x) { return jet_from_taylor(f(taylor_inputs(x))); };
    };
    return v;
}

inline std::function<int(const ParamSet&)> fixed_dim(int n) {
    return [n](const ParamSet&) { return n; };
}

inline std::function<int(const ParamSet&)> dim_from_n() {
    return [](const ParamSet& p) { return p.integer("n"); };
}

inline std::function<std::vector<int>(const ParamSet&)> adapted_first(int l) {
    return [l](const ParamSet&) {
        std::vector<int> v(l);
        for (int j = 0; j < l; ++j) v[j] = j;
        return v;
    };
}

inline std::function<std::vector<int>(const ParamSet&)> adapted_first_l() {
    return [](const ParamSet& p) {
        std::vector<int> v(p.integer("l"));
        for (int j = 0; j < static_cast<int>(v.size()); ++j) v[j] = j;
        return v;
    };
}

inline std::function<NullitySpec(const ParamSet&)> nullity_exact(int v) {
    return [v](const ParamSet&) { return NullitySpec{v, false}; };
}

inline std::function<NullitySpec(const ParamSet&)> nullity_n_minus_l() {
    return [](const ParamSet& p) { return NullitySpec{p.integer("n") - p.integer("l"), false}; };
}

inline std::function<NullitySpec(const ParamSet&)> nullity_positive() {
    return [](const ParamSet&) { return NullitySpec{1, true}; };
}

inline Domain box_domain(std::vector<Interval> box) {
    Domain d;
    d.box = std::move(box);
    return d;
}

inline Eigen::MatrixXd diag_metric(const std::vector<double>& d) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (size_t j = 0; j < d.size(); ++j) g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = d[j];
    return g;
}

inline ParamPredicate predicate(std::string text, std::function<bool(const ParamSet&)> f) {
    return ParamPredicate{std::move(text), std::move(f)};
}

void add_flat_families(std::vector<Family>& out);
void add_projective_families(std::vector<Family>& out);
void add_hyperbolic_surface_families(std::vector<Family>& out);
void add_hyperbolic_warped_families(std::vector<Family>& out);
void add_nullity_families(std::vector<Family>& out);
void add_control_families(std::vector<Family>& out);

}  // namespace hsl::fam
