#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hslab/ambient.hpp"
#include "hslab/catalog.hpp"
#include "hslab/jets.hpp"

namespace hsl {

// Intrinsic and extrinsic data of an immersion at one chart point.
struct GeometryAtPoint {
    int n = 0;
    Jet2 jet;
    Eigen::MatrixXd g;
    Eigen::MatrixXd g_inv;
    double min_eigenvalue = 0.0;
    std::vector<Eigen::MatrixXd> christoffel;  // christoffel[l](j,k) = Gamma^l_{jk}
    std::vector<CVec> h;                       // n*n entries, h(d_j, d_k) at j*n+k
    CVec H;
    Eigen::VectorXd jh_tangent;
    std::vector<double> cubic;                 // C_{jkl} = Re<h(d_j,d_k), i d_l> at (j*n+k)*n+l

    const CVec& hess_normal(int j, int k) const { return h[j * n + k]; }
    double C(int j, int k, int l) const { return cubic[(j * n + k) * n + l]; }
    double gamma(int l, int j, int k) const { return christoffel[l](j, k); }
};

inline constexpr double kOuterStep = 1e-2;
inline constexpr double kRankTol = 1e-6;

Eigen::MatrixXd induced_metric(const Jet2& jet, const AmbientModel& model);
double lagrangian_residual(const Jet2& jet, const AmbientModel& model);

// g, Christoffels, h, H, JH and the cubic form.  Throws DegeneracyError when g is not positive definite.
GeometryAtPoint second_fundamental_form(const Jet2& jet, const AmbientModel& model);
CVec mean_curvature(const GeometryAtPoint& geom);

GeometryAtPoint geometry_at(const Immersion& imm, const ChartPoint& p, double step = kDefaultStep,
                            JetMode mode = JetMode::prefer_analytic);

struct CurvatureResidual {
    double intrinsic = 0.0;  // max |K - epsilon| over coordinate planes
    double gauss = 0.0;      // max |K - Gauss right-hand side|
    double value() const { return std::max(intrinsic, gauss); }
};

CurvatureResidual sectional_curvature_residual(const Immersion& imm, const ChartPoint& p, double step = kOuterStep,
                                               JetMode mode = JetMode::prefer_analytic);
double div_jh(const Immersion& imm, const ChartPoint& p, double step = kOuterStep,
              JetMode mode = JetMode::prefer_analytic);
int relative_nullity(const GeometryAtPoint& geom, double rank_tol = kRankTol);

// max |h(d_j,d_k) - delta_jk [j adapted] i d_j|
double pattern_residual(const GeometryAtPoint& geom, const std::vector<int>& adapted);
// max |Re<h_jk, d_l>| and, for lifts, the components along z and iz
double normality_residual(const GeometryAtPoint& geom, const AmbientModel& model);
double cubic_symmetry_residual(const GeometryAtPoint& geom);
// max |normal part of i hess_jk - i (tangential part of hess_jk)|
double normal_connection_residual(const GeometryAtPoint& geom, const AmbientModel& model);
// max |(nabla_j C)_{klm} - (nabla_k C)_{jlm}|
double codazzi_residual(const Immersion& imm, const ChartPoint& p, double step = kOuterStep,
                        JetMode mode = JetMode::prefer_analytic);
double h_norm(const GeometryAtPoint& geom);
double metric_deviation(const GeometryAtPoint& geom, const Eigen::MatrixXd& advertised);

struct Bump {
    ChartPoint center;
    double radius = 0.5;
    double amplitude = 1.0;

    double value(const ChartPoint& x) const;
    Eigen::VectorXd gradient(const ChartPoint& x) const;
    Eigen::MatrixXd hessian(const ChartPoint& x) const;
};

struct FirstVariation {
    double dvol_dt = 0.0;    // central difference in t of the deformed volume
    double predicted = 0.0;  // -n * integral of f div(JH) dM
    double volume = 0.0;     // volume of the bump's coordinate box
};

// Hamiltonian deformation L + t i grad(f) of a flat-ambient immersion.
FirstVariation first_variation(const Immersion& imm, const Bump& bump, double t_step = 1e-3, int nodes_per_axis = 0);

}  // namespace hsl
