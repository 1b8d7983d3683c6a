#include "hslab/diffgeo.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/errors.hpp"
#include "hslab/specfun.hpp"

namespace hsl {

Eigen::MatrixXd induced_metric(const Jet2& jet, const AmbientModel& model) {
    const int n = jet.n;
    Eigen::MatrixXd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) g(j, k) = g(k, j) = re_herm(jet.grad[j], jet.grad[k], model);
    return g;
}

double lagrangian_residual(const Jet2& jet, const AmbientModel& model) {
    return isotropy_residual(jet.grad, model);
}

namespace {

CVec normal_part(const CVec& v, const GeometryAtPoint& geom, const AmbientModel& model) {
    const int n = geom.n;
    Eigen::VectorXd c(n);
    for (int m = 0; m < n; ++m) c[m] = re_herm(v, geom.jet.grad[m], model);
    const Eigen::VectorXd coef = geom.g_inv * c;
    CVec out = v;
    for (int l = 0; l < n; ++l) out -= coef[l] * geom.jet.grad[l];
    if (model.is_lift()) out = horizontal_project(out, geom.jet.value, model);
    return out;
}

}  // namespace

GeometryAtPoint second_fundamental_form(const Jet2& jet, const AmbientModel& model) {
    const int n = jet.n;
    GeometryAtPoint geom;
    geom.n = n;
    geom.jet = jet;
    geom.g = induced_metric(jet, model);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(geom.g, Eigen::EigenvaluesOnly);
    geom.min_eigenvalue = eig.eigenvalues().minCoeff();
    if (!(geom.min_eigenvalue > 0))
        throw DegeneracyError("induced metric is not positive definite (min eigenvalue " +
                              std::to_string(geom.min_eigenvalue) + ")");
    geom.g_inv = geom.g.inverse();

    geom.christoffel.assign(n, Eigen::MatrixXd::Zero(n, n));
    geom.h.assign(n * n, CVec());
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const CVec& X = jet.hess(j, k);
            Eigen::VectorXd c(n);
            for (int m = 0; m < n; ++m) c[m] = re_herm(X, jet.grad[m], model);
            const Eigen::VectorXd coef = geom.g_inv * c;
            CVec Y = X;
            for (int l = 0; l < n; ++l) {
                geom.christoffel[l](j, k) = geom.christoffel[l](k, j) = coef[l];
                Y -= coef[l] * jet.grad[l];
            }
            if (model.is_lift()) Y = horizontal_project(Y, jet.value, model);
            geom.h[j * n + k] = Y;
            geom.h[k * n + j] = Y;
        }
    geom.H = mean_curvature(geom);

    Eigen::VectorXd c(n);
    const CVec iH = I * geom.H;
    for (int l = 0; l < n; ++l) c[l] = re_herm(iH, jet.grad[l], model);
    geom.jh_tangent = geom.g_inv * c;

    geom.cubic.assign(n * n * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const CVec& hjk = geom.h[j * n + k];
            for (int l = 0; l < n; ++l) geom.cubic[(j * n + k) * n + l] = re_herm(hjk, I * jet.grad[l], model);
        }
    return geom;
}

CVec mean_curvature(const GeometryAtPoint& geom) {
    const int n = geom.n;
    CVec H = CVec::Zero(geom.jet.ambient_dim());
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) H += geom.g_inv(j, k) * geom.h[j * n + k];
    return H / static_cast<double>(n);
}

GeometryAtPoint geometry_at(const Immersion& imm, const ChartPoint& p, double step, JetMode mode) {
    return second_fundamental_form(evaluate_jet(imm.par, p, step, mode), imm.ambient);
}

namespace {

ChartPoint shifted(const ChartPoint& p, int axis, double d) {
    ChartPoint q = p;
    q[axis] += d;
    return q;
}

// Five-point central derivative along one axis of a vector-valued quantity, Richardson-extrapolated
// between steps s/2 and s.
template <class F>
Eigen::VectorXd five_point(const F& f, const ChartPoint& p, int axis, double s) {
    const Eigen::VectorXd h1 = f(shifted(p, axis, s / 2)), m1 = f(shifted(p, axis, -s / 2));
    const Eigen::VectorXd h2 = f(shifted(p, axis, s)), m2 = f(shifted(p, axis, -s));
    const Eigen::VectorXd h4 = f(shifted(p, axis, 2 * s)), m4 = f(shifted(p, axis, -2 * s));
    const Eigen::VectorXd fine = ((h1 - m1) * 8.0 - (h2 - m2)) / (6 * s);
    const Eigen::VectorXd coarse = ((h2 - m2) * 8.0 - (h4 - m4)) / (12 * s);
    return (16 * fine - coarse) / 15;
}

void require_outer(const Immersion& imm, const ChartPoint& p, double step) {
    if (!(step > 0)) throw DomainError("stencil step must be positive");
    imm.par.domain.require(p, 2 * step + 2 * kDefaultStep);
}

Eigen::VectorXd flat_christoffel(const GeometryAtPoint& g) {
    const int n = g.n;
    Eigen::VectorXd v(n * n * n);
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) v[(l * n + j) * n + k] = g.christoffel[l](j, k);
    return v;
}

}  // namespace

CurvatureResidual sectional_curvature_residual(const Immersion& imm, const ChartPoint& p, double step, JetMode mode) {
    require_outer(imm, p, step);
    const int n = imm.dim();
    const double eps = imm.ambient.epsilon;
    const GeometryAtPoint g0 = geometry_at(imm, p, kDefaultStep, mode);
    auto gam = [&](const ChartPoint& q) { return flat_christoffel(geometry_at(imm, q, kDefaultStep, mode)); };
    std::vector<Eigen::VectorXd> dG(n);
    for (int i = 0; i < n; ++i) dG[i] = five_point(gam, p, i, step);
    auto G = [&](int l, int j, int k) { return g0.christoffel[l](j, k); };
    auto dGam = [&](int i, int l, int j, int k) { return dG[i][(l * n + j) * n + k]; };

    CurvatureResidual r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // R^l_{ijj} = d_i G^l_jj - d_j G^l_ij + G^l_im G^m_jj - G^l_jm G^m_ij
            double Rijji = 0;
            for (int l = 0; l < n; ++l) {
                double R = dGam(i, l, j, j) - dGam(j, l, i, j);
                for (int m = 0; m < n; ++m) R += G(l, i, m) * G(m, j, j) - G(l, j, m) * G(m, i, j);
                Rijji += g0.g(i, l) * R;
            }
            const double area = g0.g(i, i) * g0.g(j, j) - g0.g(i, j) * g0.g(i, j);
            const double K = Rijji / area;
            const double Kg = eps + (re_herm(g0.hess_normal(i, i), g0.hess_normal(j, j), imm.ambient) -
                                     re_herm(g0.hess_normal(i, j), g0.hess_normal(i, j), imm.ambient)) /
                                        area;
            r.intrinsic = std::max(r.intrinsic, std::abs(K - eps));
            r.gauss = std::max(r.gauss, std::abs(K - Kg));
        }
    return r;
}

double div_jh(const Immersion& imm, const ChartPoint& p, double step, JetMode mode) {
    require_outer(imm, p, step);
    const int n = imm.dim();
    auto density = [&](const ChartPoint& q) -> Eigen::VectorXd {
        const GeometryAtPoint g = geometry_at(imm, q, kDefaultStep, mode);
        return std::sqrt(g.g.determinant()) * g.jh_tangent;
    };
    double s = 0;
    for (int k = 0; k < n; ++k) s += five_point(density, p, k, step)[k];
    const GeometryAtPoint g0 = geometry_at(imm, p, kDefaultStep, mode);
    return s / std::sqrt(g0.g.determinant());
}

int relative_nullity(const GeometryAtPoint& geom, double rank_tol) {
    const int n = geom.n;
    const int m = geom.jet.ambient_dim();
    Eigen::MatrixXd M(n, n * m * 2);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < m; ++a) {
                M(j, (k * m + a) * 2) = geom.h[j * n + k][a].real();
                M(j, (k * m + a) * 2 + 1) = geom.h[j * n + k][a].imag();
            }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s.maxCoeff() : 0.0;
    const double cut = rank_tol * std::max(smax, 1.0);
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > cut) ++rank;
    return n - rank;
}

double pattern_residual(const GeometryAtPoint& geom, const std::vector<int>& adapted) {
    const int n = geom.n;
    std::vector<bool> is_adapted(n, false);
    for (int j : adapted) is_adapted.at(j) = true;
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            CVec d = geom.h[j * n + k];
            if (j == k && is_adapted[j]) d -= I * geom.jet.grad[j];
            r = std::max(r, d.cwiseAbs().maxCoeff());
        }
    return r;
}

double normality_residual(const GeometryAtPoint& geom, const AmbientModel& model) {
    const int n = geom.n;
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const CVec& h = geom.h[j * n + k];
            for (int l = 0; l < n; ++l) r = std::max(r, std::abs(re_herm(h, geom.jet.grad[l], model)));
            if (model.is_lift()) {
                r = std::max(r, std::abs(re_herm(h, geom.jet.value, model)));
                r = std::max(r, std::abs(re_herm(h, I * geom.jet.value, model)));
            }
        }
    return r;
}

double cubic_symmetry_residual(const GeometryAtPoint& geom) {
    const int n = geom.n;
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const double c = geom.C(j, k, l);
                r = std::max({r, std::abs(c - geom.C(k, j, l)), std::abs(c - geom.C(j, l, k)), std::abs(c - geom.C(l, k, j))});
            }
    return r;
}

double normal_connection_residual(const GeometryAtPoint& geom, const AmbientModel& model) {
    const int n = geom.n;
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const CVec lhs = normal_part(I * geom.jet.hess(j, k), geom, model);
            CVec tangential = CVec::Zero(geom.jet.ambient_dim());
            for (int l = 0; l < n; ++l) tangential += geom.christoffel[l](j, k) * geom.jet.grad[l];
            r = std::max(r, (lhs - I * tangential).cwiseAbs().maxCoeff());
        }
    return r;
}

double codazzi_residual(const Immersion& imm, const ChartPoint& p, double step, JetMode mode) {
    require_outer(imm, p, step);
    const int n = imm.dim();
    const GeometryAtPoint g0 = geometry_at(imm, p, kDefaultStep, mode);
    auto cubic = [&](const ChartPoint& q) -> Eigen::VectorXd {
        const auto c = geometry_at(imm, q, kDefaultStep, mode).cubic;
        return Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
    };
    std::vector<Eigen::VectorXd> dC(n);
    for (int j = 0; j < n; ++j) dC[j] = five_point(cubic, p, j, step);
    auto nabla = [&](int j, int k, int l, int m) {
        double v = dC[j][(k * n + l) * n + m];
        for (int q = 0; q < n; ++q)
            v -= g0.gamma(q, j, k) * g0.C(q, l, m) + g0.gamma(q, j, l) * g0.C(k, q, m) + g0.gamma(q, j, m) * g0.C(k, l, q);
        return v;
    };
    double r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m) r = std::max(r, std::abs(nabla(j, k, l, m) - nabla(k, j, l, m)));
    return r;
}

double h_norm(const GeometryAtPoint& geom) {
    double r = 0;
    for (const auto& v : geom.h) r = std::max(r, v.cwiseAbs().maxCoeff());
    return r;
}

double metric_deviation(const GeometryAtPoint& geom, const Eigen::MatrixXd& advertised) {
    if (advertised.rows() != geom.n || advertised.cols() != geom.n)
        throw DimensionError("advertised metric has the wrong size");
    return (geom.g - advertised).cwiseAbs().maxCoeff();
}

// ---- first variation ----

namespace {

struct BumpProfile {
    double phi, d1, d2;  // phi(s), phi'(s), phi''(s) for phi(s) = exp(1 - 1/(1-s))
};

BumpProfile profile(double s) {
    if (s >= 1) return {0, 0, 0};
    const double u = 1 / (1 - s);
    const double phi = std::exp(1 - u);
    return {phi, -phi * u * u, phi * (u * u * u * u - 2 * u * u * u)};
}

double radial(const Bump& b, const ChartPoint& x) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += (x[i] - b.center[i]) * (x[i] - b.center[i]);
    return s / (b.radius * b.radius);
}

}  // namespace

double Bump::value(const ChartPoint& x) const { return amplitude * profile(radial(*this, x)).phi; }

Eigen::VectorXd Bump::gradient(const ChartPoint& x) const {
    const int n = static_cast<int>(x.size());
    const BumpProfile pr = profile(radial(*this, x));
    Eigen::VectorXd g(n);
    for (int i = 0; i < n; ++i) g[i] = amplitude * pr.d1 * 2 * (x[i] - center[i]) / (radius * radius);
    return g;
}

Eigen::MatrixXd Bump::hessian(const ChartPoint& x) const {
    const int n = static_cast<int>(x.size());
    const BumpProfile pr = profile(radial(*this, x));
    const double R2 = radius * radius;
    Eigen::MatrixXd H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H(i, j) = amplitude * (pr.d2 * 4 * (x[i] - center[i]) * (x[j] - center[j]) / (R2 * R2) + (i == j ? pr.d1 * 2 / R2 : 0.0));
    return H;
}

FirstVariation first_variation(const Immersion& imm, const Bump& bump, double t_step, int nodes_per_axis) {
    if (imm.ambient.is_lift()) throw UnsupportedModelError("first variation is implemented for the flat ambient only");
    const int n = imm.dim();
    if (static_cast<int>(bump.center.size()) != n) throw DimensionError("bump center has the wrong dimension");
    if (!(bump.radius > 0)) throw SupportError("bump radius must be positive");
    const Domain& dom = imm.par.domain;
    const double reach = 2 * kOuterStep + 2 * kDefaultStep;
    for (int i = 0; i < n; ++i)
        if (bump.center[i] - bump.radius - reach <= dom.box[i].lo || bump.center[i] + bump.radius + reach >= dom.box[i].hi)
            throw SupportError("bump support touches the boundary of the coordinate patch");
    {
        // the support must avoid every singular locus: probe the ball with a margin
        std::vector<int> idx(n, 0);
        const int probes = 7;
        while (true) {
            ChartPoint q(n);
            for (int i = 0; i < n; ++i) q[i] = bump.center[i] + bump.radius * (2.0 * idx[i] / (probes - 1) - 1);
            if (!dom.admits(q, reach)) throw SupportError("bump support meets a singular locus of the chart");
            int i = 0;
            while (i < n && ++idx[i] == probes) idx[i++] = 0;
            if (i == n) break;
        }
        if (!dom.admits(bump.center, reach)) throw SupportError("bump center too close to the chart boundary");
    }

    const int per_axis = nodes_per_axis > 0 ? nodes_per_axis : (n <= 2 ? 48 : (n == 3 ? 20 : 10));
    const int panels = 4;
    const int k = std::max(2, per_axis / panels);
    const QuadratureRule rule = gauss_legendre(k);
    const std::vector<double>& gx = rule.nodes;
    const std::vector<double>& gw = rule.weights;
    std::vector<double> nodes, weights;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = -1 + 2.0 * pnl / panels, b = a + 2.0 / panels;
        for (int i = 0; i < k; ++i) {
            nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[i]);
            weights.push_back(0.5 * (b - a) * gw[i]);
        }
    }
    const int q = static_cast<int>(nodes.size());

    FirstVariation out;
    double vol_plus = 0, vol_minus = 0;
    std::vector<int> idx(n, 0);
    while (true) {
        ChartPoint x(n);
        double w = 1;
        for (int i = 0; i < n; ++i) {
            x[i] = bump.center[i] + bump.radius * nodes[idx[i]];
            w *= weights[idx[i]] * bump.radius;
        }
        const Jet2 jet = evaluate_jet(imm.par, x, kDefaultStep);
        const Eigen::MatrixXd g = induced_metric(jet, imm.ambient);
        const double vol0 = std::sqrt(g.determinant());
        out.volume += w * vol0;
        if (radial(bump, x) < 1) {
            const Eigen::MatrixXd gi = g.inverse();
            const Eigen::VectorXd df = bump.gradient(x);
            const Eigen::MatrixXd ddf = bump.hessian(x);
            const Eigen::VectorXd u = gi * df;
            std::vector<CVec> dV(n, CVec::Zero(jet.ambient_dim()));
            for (int j = 0; j < n; ++j) {
                Eigen::MatrixXd dg(n, n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        dg(a, b) = re_herm(jet.hess(j, a), jet.grad[b], imm.ambient) + re_herm(jet.grad[a], jet.hess(j, b), imm.ambient);
                const Eigen::VectorXd du = -gi * dg * gi * df + gi * ddf.col(j);
                for (int a = 0; a < n; ++a) dV[j] += du[a] * jet.grad[a] + u[a] * jet.hess(j, a);
            }
            auto vol_at = [&](double t) {
                std::vector<CVec> d(n);
                for (int j = 0; j < n; ++j) d[j] = jet.grad[j] + t * I * dV[j];
                Eigen::MatrixXd gt(n, n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) gt(a, b) = re_herm(d[a], d[b], imm.ambient);
                return std::sqrt(gt.determinant());
            };
            vol_plus += w * vol_at(t_step);
            vol_minus += w * vol_at(-t_step);
            const double f = bump.value(x);
            if (f != 0) out.predicted += -n * w * f * div_jh(imm, x) * vol0;
        } else {
            vol_plus += w * vol0;
            vol_minus += w * vol0;
        }
        int i = 0;
        while (i < n && ++idx[i] == q) idx[i++] = 0;
        if (i == n) break;
    }
    out.dvol_dt = (vol_plus - vol_minus) / (2 * t_step);
    return out;
}

}  // namespace hsl
