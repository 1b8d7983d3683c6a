#pragma once

#include <functional>
#include <vector>

#include "hslab/ambient.hpp"
#include "hslab/params.hpp"

namespace hsl {

// Value, first and second partials of a map R^n -> C^m at one chart point.
// The Hessian is stored once per unordered pair so hess(j,k) and hess(k,j) are the same object.
struct Jet2 {
    int n = 0;
    CVec value;
    std::vector<CVec> grad;

    Jet2() = default;
    Jet2(int n_, int m);

    const CVec& hess(int j, int k) const { return hess_[index(j, k)]; }
    CVec& hess(int j, int k) { return hess_[index(j, k)]; }
    int ambient_dim() const { return static_cast<int>(value.size()); }

private:
    int index(int j, int k) const {
        if (j > k) std::swap(j, k);
        return j * n - j * (j - 1) / 2 + (k - j);
    }
    std::vector<CVec> hess_;
};

using MapFn = std::function<CVec(const ChartPoint&)>;
using JetFn = std::function<Jet2(const ChartPoint&)>;

// A closed-form map with its admissible region and optional exact derivatives.
struct Parametrization {
    int dim = 0;         // intrinsic dimension n
    int ambient_dim = 0; // length of the output vector
    MapFn map;
    JetFn analytic;      // may be empty
    Domain domain;

    bool has_analytic() const { return static_cast<bool>(analytic); }
    CVec operator()(const ChartPoint& p) const;
};

enum class JetMode { prefer_analytic, finite_difference };

inline constexpr double kDefaultStep = 1e-3;

// Central differences with one Richardson level; mixed partials from the 3x3 stencil.
Jet2 fd_jet(const MapFn& f, const ChartPoint& p, double step = kDefaultStep);

// Domain-checked jet with a 2*step margin.  Analytic derivatives are used when registered
// unless mode asks for finite differences.
Jet2 evaluate_jet(const Parametrization& par, const ChartPoint& p, double step = kDefaultStep,
                  JetMode mode = JetMode::prefer_analytic);

double max_deviation(const Jet2& a, const Jet2& b);

// Second-order forward-mode scalar: value, gradient and Hessian with respect to n inputs.
struct Taylor2 {
    cplx v;
    Eigen::VectorXcd g;
    Eigen::MatrixXcd h;

    Taylor2() = default;
    Taylor2(cplx value, int n) : v(value), g(Eigen::VectorXcd::Zero(n)), h(Eigen::MatrixXcd::Zero(n, n)) {}
    static Taylor2 variable(double value, int index, int n);
    int n() const { return static_cast<int>(g.size()); }
};

Taylor2 operator+(const Taylor2& a, const Taylor2& b);
Taylor2 operator-(const Taylor2& a, const Taylor2& b);
Taylor2 operator*(const Taylor2& a, const Taylor2& b);
Taylor2 operator/(const Taylor2& a, const Taylor2& b);
Taylor2 operator-(const Taylor2& a);
Taylor2 operator+(const Taylor2& a, cplx s);
Taylor2 operator+(cplx s, const Taylor2& a);
Taylor2 operator-(const Taylor2& a, cplx s);
Taylor2 operator-(cplx s, const Taylor2& a);
Taylor2 operator*(const Taylor2& a, cplx s);
Taylor2 operator*(cplx s, const Taylor2& a);
Taylor2 operator/(const Taylor2& a, cplx s);
Taylor2 operator/(cplx s, const Taylor2& a);
Taylor2 exp(const Taylor2& a);
Taylor2 sin(const Taylor2& a);
Taylor2 cos(const Taylor2& a);
Taylor2 sinh(const Taylor2& a);
Taylor2 cosh(const Taylor2& a);
Taylor2 tan(const Taylor2& a);
Taylor2 tanh(const Taylor2& a);
Taylor2 sqrt(const Taylor2& a);
Taylor2 log(const Taylor2& a);
Taylor2 atan(const Taylor2& a);

// Builds a Jet2 from the components of a map evaluated on Taylor2 inputs.
Jet2 jet_from_taylor(const std::vector<Taylor2>& components);
std::vector<Taylor2> taylor_inputs(const ChartPoint& p);

}  // namespace hsl
