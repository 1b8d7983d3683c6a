#include "hslab/jets.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/errors.hpp"

namespace hsl {

Jet2::Jet2(int n_, int m) : n(n_), value(CVec::Zero(m)), grad(n_, CVec::Zero(m)), hess_(n_ * (n_ + 1) / 2, CVec::Zero(m)) {}

CVec Parametrization::operator()(const ChartPoint& p) const {
    CVec v = map(p);
    if (v.size() != ambient_dim)
        throw DimensionError("evaluator returned " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(ambient_dim));
    return v;
}

Jet2 fd_jet(const MapFn& f, const ChartPoint& p, double step) {
    if (!(step > 0)) throw DomainError("finite-difference step must be positive");
    const int n = static_cast<int>(p.size());
    CVec f0 = f(p);
    const int m = static_cast<int>(f0.size());
    Jet2 jet(n, m);
    jet.value = f0;

    auto at = [&](int j, double dj, int k, double dk) {
        ChartPoint q = p;
        q[j] += dj;
        if (k >= 0) q[k] += dk;
        return f(q);
    };

    // f at +-h, +-2h along each axis
    std::vector<CVec> p1(n), m1(n), p2(n), m2(n);
    for (int j = 0; j < n; ++j) {
        p1[j] = at(j, step, -1, 0);
        m1[j] = at(j, -step, -1, 0);
        p2[j] = at(j, 2 * step, -1, 0);
        m2[j] = at(j, -2 * step, -1, 0);
    }
    const double h = step;
    for (int j = 0; j < n; ++j) {
        CVec d1 = (p1[j] - m1[j]) / (2 * h);
        CVec d2 = (p2[j] - m2[j]) / (4 * h);
        jet.grad[j] = (4.0 * d1 - d2) / 3.0;

        CVec s1 = (p1[j] - 2.0 * f0 + m1[j]) / (h * h);
        CVec s2 = (p2[j] - 2.0 * f0 + m2[j]) / (4 * h * h);
        jet.hess(j, j) = (4.0 * s1 - s2) / 3.0;
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            auto mixed = [&](double s) -> CVec {
                return (at(j, s, k, s) - at(j, s, k, -s) - at(j, -s, k, s) + at(j, -s, k, -s)) / (4 * s * s);
            };
            jet.hess(j, k) = (4.0 * mixed(h) - mixed(2 * h)) / 3.0;
        }
    return jet;
}

Jet2 evaluate_jet(const Parametrization& par, const ChartPoint& p, double step, JetMode mode) {
    if (static_cast<int>(p.size()) != par.dim)
        throw DimensionError("chart point has " + std::to_string(p.size()) + " coordinates, expected " +
                             std::to_string(par.dim));
    par.domain.require(p, 2 * step);
    Jet2 jet = (mode == JetMode::prefer_analytic && par.has_analytic()) ? par.analytic(p)
                                                                         : fd_jet([&](const ChartPoint& q) { return par(q); }, p, step);
    if (jet.ambient_dim() != par.ambient_dim)
        throw DimensionError("jet has " + std::to_string(jet.ambient_dim()) + " entries, expected " +
                             std::to_string(par.ambient_dim));
    return jet;
}

double max_deviation(const Jet2& a, const Jet2& b) {
    if (a.n != b.n || a.ambient_dim() != b.ambient_dim()) throw DimensionError("jets of different shape");
    double r = (a.value - b.value).cwiseAbs().maxCoeff();
    for (int j = 0; j < a.n; ++j) {
        r = std::max(r, (a.grad[j] - b.grad[j]).cwiseAbs().maxCoeff());
        for (int k = j; k < a.n; ++k) r = std::max(r, (a.hess(j, k) - b.hess(j, k)).cwiseAbs().maxCoeff());
    }
    return r;
}

Taylor2 Taylor2::variable(double value, int index, int n) {
    Taylor2 t(value, n);
    t.g[index] = 1.0;
    return t;
}

Taylor2 operator+(const Taylor2& a, const Taylor2& b) {
    Taylor2 r;
    r.v = a.v + b.v;
    r.g = a.g + b.g;
    r.h = a.h + b.h;
    return r;
}

Taylor2 operator-(const Taylor2& a, const Taylor2& b) {
    Taylor2 r;
    r.v = a.v - b.v;
    r.g = a.g - b.g;
    r.h = a.h - b.h;
    return r;
}

Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
    Taylor2 r;
    r.v = a.v * b.v;
    r.g = a.v * b.g + b.v * a.g;
    r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
    return r;
}

namespace {
// f(a) given f, f', f'' at a.v
Taylor2 chain(const Taylor2& a, cplx f0, cplx f1, cplx f2) {
    Taylor2 r;
    r.v = f0;
    r.g = f1 * a.g;
    r.h = f1 * a.h + f2 * (a.g * a.g.transpose());
    return r;
}
}  // namespace

Taylor2 operator/(const Taylor2& a, const Taylor2& b) {
    const cplx inv = 1.0 / b.v;
    return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Taylor2 operator-(const Taylor2& a) { return a * cplx(-1.0); }

Taylor2 operator+(const Taylor2& a, cplx s) {
    Taylor2 r = a;
    r.v += s;
    return r;
}
Taylor2 operator+(cplx s, const Taylor2& a) { return a + s; }
Taylor2 operator-(const Taylor2& a, cplx s) { return a + (-s); }
Taylor2 operator-(cplx s, const Taylor2& a) { return (-a) + s; }

Taylor2 operator*(const Taylor2& a, cplx s) {
    Taylor2 r;
    r.v = a.v * s;
    r.g = a.g * s;
    r.h = a.h * s;
    return r;
}
Taylor2 operator*(cplx s, const Taylor2& a) { return a * s; }
Taylor2 operator/(const Taylor2& a, cplx s) { return a * (1.0 / s); }
Taylor2 operator/(cplx s, const Taylor2& a) {
    const cplx inv = 1.0 / a.v;
    return s * chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Taylor2 exp(const Taylor2& a) {
    const cplx e = std::exp(a.v);
    return chain(a, e, e, e);
}
Taylor2 sin(const Taylor2& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
Taylor2 cos(const Taylor2& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
Taylor2 sinh(const Taylor2& a) { return chain(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
Taylor2 cosh(const Taylor2& a) { return chain(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }
Taylor2 tan(const Taylor2& a) {
    const cplx t = std::tan(a.v), s2 = 1.0 + t * t;
    return chain(a, t, s2, 2.0 * t * s2);
}
Taylor2 tanh(const Taylor2& a) {
    const cplx t = std::tanh(a.v), s2 = 1.0 - t * t;
    return chain(a, t, s2, -2.0 * t * s2);
}
Taylor2 sqrt(const Taylor2& a) {
    const cplx r = std::sqrt(a.v);
    return chain(a, r, 0.5 / r, -0.25 / (r * a.v));
}
Taylor2 log(const Taylor2& a) { return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
Taylor2 atan(const Taylor2& a) {
    const cplx d = 1.0 / (1.0 + a.v * a.v);
    return chain(a, std::atan(a.v), d, -2.0 * a.v * d * d);
}

std::vector<Taylor2> taylor_inputs(const ChartPoint& p) {
    const int n = static_cast<int>(p.size());
    std::vector<Taylor2> xs;
    xs.reserve(n);
    for (int j = 0; j < n; ++j) xs.push_back(Taylor2::variable(p[j], j, n));
    return xs;
}

Jet2 jet_from_taylor(const std::vector<Taylor2>& components) {
    if (components.empty()) throw DimensionError("empty component list");
    const int n = components[0].n();
    const int m = static_cast<int>(components.size());
    Jet2 jet(n, m);
    for (int a = 0; a < m; ++a) {
        jet.value[a] = components[a].v;
        for (int j = 0; j < n; ++j) {
            jet.grad[j][a] = components[a].g[j];
            for (int k = j; k < n; ++k) jet.hess(j, k)[a] = 0.5 * (components[a].h(j, k) + components[a].h(k, j));
        }
    }
    return jet;
}

}  // namespace hsl
