#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hslab/catalog.hpp"
#include "hslab/jets.hpp"
#include "hslab/params.hpp"

namespace hsl {

// Value, gradient and Hessian of one real twistor function.
struct FunctionJet {
    double v = 0.0;
    Eigen::VectorXd g;
    Eigen::MatrixXd h;
};

// Twistor functions f_1..f_l of a twisted product decomposition, on a chart of dimension dim >= l.
// For l = 2 the pair is written (f, k) with coordinates (x, y).
struct TwistorSolution {
    std::string id;
    std::string label;
    int l = 2;
    int dim = 2;
    int epsilon = 0;
    ParamSet params;
    std::vector<std::string> equations;  // subset of "3.5", "3.8", "6.1", "6.2", "6.3"
    bool traveling_wave = false;         // f = +-k = F(x + y)
    Domain domain;
    std::function<std::vector<FunctionJet>(const ChartPoint&)> eval;

    bool declares(const std::string& eq) const;
};

struct SolutionInfo {
    std::string id;
    std::string label;
    int epsilon;
    std::vector<ParamSpec> params;
    std::vector<std::string> equations;
};

const std::vector<SolutionInfo>& solution_registry();
TwistorSolution make_solution(const std::string& id, const ParamSet& params = {});

double twisted_closed_residual(const TwistorSolution& sol, const ChartPoint& p);
double hstationary_residual(const TwistorSolution& sol, const ChartPoint& p);
// (f_y/k)_y + (k_x/f)_x + epsilon f k
double curvature_residual(const TwistorSolution& sol, const ChartPoint& p);
// (k/f)_x + (f/k)_y
double ratio_residual(const TwistorSolution& sol, const ChartPoint& p);
// f_y/k - k_x/f
double closed_pair_residual(const TwistorSolution& sol, const ChartPoint& p);
double equation_residual(const TwistorSolution& sol, const std::string& eq, const ChartPoint& p);

struct EquationResidual {
    std::string equation;
    double max = 0.0;
    double rms = 0.0;
};

struct ResidualReport {
    std::string solution;
    int points = 0;
    std::uint64_t seed = 0;
    std::vector<EquationResidual> equations;
    double max() const;
};

ResidualReport full_system_residual(const TwistorSolution& sol, const std::vector<ChartPoint>& grid,
                                    const std::vector<std::string>& equations = {"6.1", "6.2", "6.3"});
std::vector<ChartPoint> solution_grid(const TwistorSolution& sol, int count, std::uint64_t seed);

enum class ScaleMode { lemma61, lemma62 };
TwistorSolution scale_transform(const TwistorSolution& sol, double m, double c, ScaleMode mode, int sign = 1);

bool type1_classifier(const TwistorSolution& sol, const std::vector<ChartPoint>& grid, double tol = 1e-10);

// max deviation between analytic partials and central differences, relative to max(1, |partial|)
double partials_fd_deviation(const TwistorSolution& sol, const ChartPoint& p, double step = 1e-4);

// Linear second-order systems satisfied by the horizontal lifts of the traveling-wave surfaces.
double sech_lift_system_residual(const Jet2& jet, const ChartPoint& p, double m);
double flat_lift_system_residual(const Jet2& jet, double b, double m);
double lift_system_residual(LiftSystem system, const Jet2& jet, const ChartPoint& p, const ParamSet& params);

}  // namespace hsl
