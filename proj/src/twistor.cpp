#include "hslab/twistor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hslab/errors.hpp"

namespace hsl {

namespace {

using T2 = Taylor2;
using Expr = std::function<std::vector<T2>(const std::vector<T2>&, const ParamSet&)>;

T2 sech(const T2& u) { return 1.0 / cosh(u); }
T2 sec(const T2& u) { return 1.0 / cos(u); }
T2 csch(const T2& u) { return 1.0 / sinh(u); }

struct Entry {
    SolutionInfo info;
    int l = 2;
    int dim = 2;
    bool traveling = false;
    std::function<Domain(const ParamSet&)> domain;
    std::function<void(const ParamSet&)> check;
    Expr expr;
};

ParamSpec param(std::string name, std::string constraint, double smoke) {
    return ParamSpec{std::move(name), std::move(constraint), smoke, smoke, smoke, false};
}

Domain box(std::vector<Interval> b) {
    Domain d;
    d.box = std::move(b);
    return d;
}

void require(bool ok, const std::string& id, const std::string& what) {
    if (!ok) throw AdmissibilityError(id + ": violated constraint " + what);
}

const std::vector<std::string> kFullSystem = {"3.5", "3.8", "6.1", "6.2", "6.3"};

// Pair (A_f F(w), A_k F(w)) with w = alpha x + beta y.
Expr wave(std::function<T2(const T2&, const ParamSet&)> profile,
          std::function<std::array<double, 4>(const ParamSet&)> coeffs) {
    return [profile, coeffs](const std::vector<T2>& x, const ParamSet& p) {
        const auto [af, ak, alpha, beta] = coeffs(p);
        const T2 w = x[0] * alpha + x[1] * beta;
        const T2 F = profile(w, p);
        return std::vector<T2>{F * af, F * ak};
    };
}

std::vector<Entry> build_entries() {
    std::vector<Entry> out;
    const double r2 = std::sqrt(2.0);

    auto type_one = [&](std::string id, std::string label, int eps, std::vector<ParamSpec> params,
                        std::function<T2(const T2&, const ParamSet&)> profile, std::function<Domain(const ParamSet&)> dom,
                        std::function<void(const ParamSet&)> check) {
        Entry e;
        e.info = {std::move(id), std::move(label), eps, std::move(params), kFullSystem};
        e.traveling = true;
        e.domain = std::move(dom);
        e.check = std::move(check);
        e.expr = wave(profile, [](const ParamSet&) { return std::array<double, 4>{1, 1, 1, 1}; });
        out.push_back(std::move(e));
    };
    auto type_two = [&](std::string id, std::string label, int eps, std::vector<ParamSpec> params,
                        std::function<T2(const T2&, const ParamSet&)> profile, std::function<Domain(const ParamSet&)> dom,
                        std::function<void(const ParamSet&)> check, bool unit_speed_scale) {
        Entry e;
        e.info = {std::move(id), std::move(label), eps, std::move(params), kFullSystem};
        e.domain = std::move(dom);
        e.check = std::move(check);
        e.expr = wave(profile, [unit_speed_scale](const ParamSet& p) {
            const double m = p.get("m");
            const double s = unit_speed_scale ? 1.0 / std::sqrt(1 + m * m) : 1.0;
            return std::array<double, 4>{m, 1.0, m * m * s, s};
        });
        out.push_back(std::move(e));
    };
    auto positive = [](const std::string& id, const std::string& name) {
        return [id, name](const ParamSet& p) { require(p.get(name) > 0, id, name + " > 0"); };
    };
    auto m_check = [](const std::string& id) {
        return [id](const ParamSet& p) {
            require(p.get("m") > 0, id, "m > 0");
            require(std::abs(p.get("m") - 1) > 1e-12, id, "m != 1");
        };
    };
    auto full_box = [](const ParamSet&) { return box({{-2, 2}, {-2, 2}}); };
    auto positive_box = [](const ParamSet&) { return box({{0.2, 1.5}, {0.2, 1.5}}); };

    type_one("typeI.sech", "Example 6.1, (6.10)", 1, {param("c1", "c1 > 0", 1.0)},
             [r2](const T2& u, const ParamSet& p) {
                 const double c = p.get("c1");
                 return sech(u * (c / r2)) * c;
             },
             full_box, positive("typeI.sech", "c1"));
    type_one("typeI.exp", "Example 6.2, f = k", 0, {param("a", "a > 0", 1.0), param("b", "b real", 0.5)},
             [](const T2& u, const ParamSet& p) { return exp(u * p.get("b")) * p.get("a"); }, full_box,
             positive("typeI.exp", "a"));
    type_one("typeI.sec", "Example 6.3 (i), f = k", -1, {param("c", "c > 0", 1.0)},
             [r2](const T2& u, const ParamSet& p) { return sec(u * (p.get("c") / r2)) * p.get("c"); },
             [r2](const ParamSet& p) {
                 const double c = p.get("c");
                 Domain d = box({{-1, 1}, {-1, 1}});
                 d.positive("cos(c(x+y)/sqrt 2) > 0", [c, r2](const ChartPoint& x) { return std::cos(c * (x[0] + x[1]) / r2); });
                 return d;
             },
             positive("typeI.sec", "c"));
    type_one("typeI.csch", "Example 6.3 (ii), f = k", -1, {param("c", "c > 0", 1.0)},
             [r2](const T2& u, const ParamSet& p) { return csch(u * (p.get("c") / r2)) * p.get("c"); }, positive_box,
             positive("typeI.csch", "c"));
    type_one("typeI.rational", "Example 6.3 (iii), f = k", -1, {},
             [r2](const T2& u, const ParamSet&) { return r2 / u; }, positive_box, [](const ParamSet&) {});

    type_two("6.11", "Example 6.1, (6.11)", 1, {param("c", "c > 0", 1.0), param("m", "m > 0, m != 1", 2.0)},
             [](const T2& w, const ParamSet& p) { return sech(w * p.get("c")) * p.get("c"); }, full_box,
             [m_check](const ParamSet& p) {
                 m_check("6.11")(p);
                 require(p.get("c") > 0, "6.11", "c > 0");
             },
             true);
    type_two("6.13", "Example 6.2, (6.13)", 0,
             {param("a", "a != 0", 1.0), param("b", "b real", 0.5), param("m", "m > 0, m != 1", 2.0)},
             [](const T2& w, const ParamSet& p) { return exp(w * p.get("b")) * p.get("a"); }, full_box,
             [m_check](const ParamSet& p) {
                 m_check("6.13")(p);
                 require(p.get("a") != 0, "6.13", "a != 0");
             },
             false);
    type_two("6.17", "Example 6.3 (i), (6.17)", -1, {param("c", "c > 0", 1.0), param("m", "m > 0, m != 1", 2.0)},
             [](const T2& w, const ParamSet& p) { return sec(w * p.get("c")) * p.get("c"); },
             [](const ParamSet& p) {
                 const double c = p.get("c"), m = p.get("m"), r = std::sqrt(1 + m * m);
                 Domain d = box({{-1, 1}, {-1, 1}});
                 d.positive("cos(c(m^2x+y)/sqrt(1+m^2)) > 0",
                            [=](const ChartPoint& x) { return std::cos(c * (m * m * x[0] + x[1]) / r); });
                 return d;
             },
             [m_check](const ParamSet& p) {
                 m_check("6.17")(p);
                 require(p.get("c") > 0, "6.17", "c > 0");
             },
             true);
    type_two("6.18", "Example 6.3 (ii), (6.18)", -1, {param("c", "c > 0", 1.0), param("m", "m > 0, m != 1", 2.0)},
             [](const T2& w, const ParamSet& p) { return csch(w * p.get("c")) * p.get("c"); }, positive_box,
             [m_check](const ParamSet& p) {
                 m_check("6.18")(p);
                 require(p.get("c") > 0, "6.18", "c > 0");
             },
             true);
    {
        Entry e;
        e.info = {"6.19", "Example 6.3 (iii), (6.19)", -1, {param("m", "m > 0, m != 1", 2.0)}, kFullSystem};
        e.domain = positive_box;
        e.check = m_check("6.19");
        e.expr = [](const std::vector<T2>& x, const ParamSet& p) {
            const double m = p.get("m"), r = std::sqrt(1 + m * m);
            const T2 w = x[0] * (m * m) + x[1];
            return std::vector<T2>{(m * r) / w, r / w};
        };
        out.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"8.1", "Theorem 8.1, (8.1)", 0, {param("a", "a != 0", 1.0), param("b", "b real", 0.5)}, kFullSystem};
        e.traveling = true;
        e.domain = full_box;
        e.check = [](const ParamSet& p) { require(p.get("a") > 0, "8.1", "a > 0"); };
        e.expr = [](const std::vector<T2>& x, const ParamSet& p) {
            const T2 f = exp((x[0] + x[1]) * p.get("b")) * p.get("a");
            return std::vector<T2>{f, f};
        };
        out.push_back(std::move(e));
    }
    type_two("8.2", "Theorem 8.1, (8.2)", 0, {param("a", "a != 0", 1.0), param("b", "b real", 0.5), param("m", "m > 0, m != 1", 2.0)},
             [](const T2& w, const ParamSet& p) { return exp(w * p.get("b")) * p.get("a"); }, full_box,
             [m_check](const ParamSet& p) {
                 m_check("8.2")(p);
                 require(p.get("a") > 0, "8.2", "a > 0");
             },
             false);
    {
        Entry e;
        e.info = {"8.3", "Theorem 8.1, (8.3)", 0, {param("a", "a > 0", 1.0), param("c", "c != 0", 1.0)}, kFullSystem};
        e.domain = [](const ParamSet&) { return box({{0.1, 2}, {-2, -0.1}}); };
        e.check = [](const ParamSet& p) {
            require(p.get("a") > 0, "8.3", "a > 0");
            require(p.get("c") != 0, "8.3", "c != 0");
        };
        e.expr = [](const std::vector<T2>& x, const ParamSet& p) {
            const double a = p.get("a"), c = p.get("c");
            const T2 phase = exp(atan(sqrt(-x[1] / x[0])) * c);
            return std::vector<T2>{phase * a / sqrt(x[0]), phase * a / sqrt(-x[1])};
        };
        out.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"cor3.1", "Corollary 3.1, f_1 = f_2", 0, {}, {"3.8", "6.1"}};
        e.domain = [](const ParamSet&) { return box({{-1, 1}, {-1, 1}}); };
        e.check = [](const ParamSet&) {};
        e.expr = [](const std::vector<T2>& x, const ParamSet&) {
            const T2 f = 2.0 + sin(x[0]) * cos(x[1] * 2.0) + x[0] * x[1] * 0.3;
            return std::vector<T2>{f, f};
        };
        out.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"prop3.3", "Proposition 3.3, warped product", 0, {}, {"3.5", "3.8", "6.1", "6.2"}};
        e.dim = 3;
        e.domain = [](const ParamSet&) { return box({{-1, 1}, {-1, 1}, {-1, 1}}); };
        e.check = [](const ParamSet&) {};
        e.expr = [](const std::vector<T2>& x, const ParamSet&) {
            return std::vector<T2>{1.0 + x[2] * x[2], cosh(x[2]) + x[2] * 0.5};
        };
        out.push_back(std::move(e));
    }
    {
        Entry e;
        e.info = {"l1", "Section 3, l = 1", 0, {}, {"3.5"}};
        e.l = 1;
        e.domain = [](const ParamSet&) { return box({{-1, 1}, {-1, 1}}); };
        e.check = [](const ParamSet&) {};
        e.expr = [](const std::vector<T2>& x, const ParamSet&) {
            return std::vector<T2>{1.0 + x[0] * x[0] + sin(x[1]) * 0.5};
        };
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return out;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = build_entries();
    return e;
}

std::vector<FunctionJet> to_jets(const std::vector<T2>& v) {
    std::vector<FunctionJet> out;
    for (const auto& t : v) {
        FunctionJet j;
        j.v = t.v.real();
        j.g = t.g.real();
        j.h = 0.5 * (t.h.real() + t.h.real().transpose());
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

bool TwistorSolution::declares(const std::string& eq) const {
    return std::find(equations.begin(), equations.end(), eq) != equations.end();
}

const std::vector<SolutionInfo>& solution_registry() {
    static const std::vector<SolutionInfo> infos = [] {
        std::vector<SolutionInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

TwistorSolution make_solution(const std::string& id, const ParamSet& given) {
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        ParamSet p;
        for (const auto& s : e.info.params) p.set(s.name, s.smoke);
        for (const auto& [k, v] : given.values()) {
            bool known = false;
            for (const auto& s : e.info.params) known = known || s.name == k;
            if (!known) throw ConfigError("solution '" + id + "' has no parameter '" + k + "'");
            p.set(k, v);
        }
        for (const auto& [k, v] : p.values())
            if (!std::isfinite(v)) throw AdmissibilityError(id + ": parameter '" + k + "' is not finite");
        e.check(p);
        TwistorSolution s;
        s.id = e.info.id;
        s.label = e.info.label;
        s.l = e.l;
        s.dim = e.dim;
        s.epsilon = e.info.epsilon;
        s.params = p;
        s.equations = e.info.equations;
        s.traveling_wave = e.traveling;
        s.domain = e.domain(p);
        const Expr expr = e.expr;
        s.eval = [expr, p](const ChartPoint& x) { return to_jets(expr(taylor_inputs(x), p)); };
        return s;
    }
    throw NotFoundError("no twistor solution with id '" + id + "'");
}

double twisted_closed_residual(const TwistorSolution& sol, const ChartPoint& p) {
    if (sol.l < 2) return 0.0;
    const auto f = sol.eval(p);
    double r = 0;
    for (int i = 0; i < sol.l; ++i)
        for (int j = i + 1; j < sol.l; ++j)
            r = std::max(r, std::abs(2 * f[i].v * f[i].g[j] - 2 * f[j].v * f[j].g[i]));
    return r;
}

double hstationary_residual(const TwistorSolution& sol, const ChartPoint& p) {
    const auto f = sol.eval(p);
    double lhs = 0, rhs = 0;
    for (int j = 0; j < sol.l; ++j) {
        const double fj2 = f[j].v * f[j].v;
        lhs += 2 * f[j].v * f[j].g[j] / (fj2 * fj2);
        for (int i = 0; i < sol.l; ++i)
            if (i != j) rhs += 2 * f[i].v * f[i].g[j] / (f[i].v * f[i].v * fj2);
    }
    return std::abs(lhs - rhs);
}

namespace {
void require_pair(const TwistorSolution& sol) {
    if (sol.l != 2) throw DimensionError(sol.id + ": equation needs a pair of twistor functions");
}
}  // namespace

double ratio_residual(const TwistorSolution& sol, const ChartPoint& p) {
    require_pair(sol);
    const auto F = sol.eval(p);
    const auto& f = F[0];
    const auto& k = F[1];
    return std::abs((k.g[0] * f.v - k.v * f.g[0]) / (f.v * f.v) + (f.g[1] * k.v - f.v * k.g[1]) / (k.v * k.v));
}

double closed_pair_residual(const TwistorSolution& sol, const ChartPoint& p) {
    require_pair(sol);
    const auto F = sol.eval(p);
    return std::abs(F[0].g[1] / F[1].v - F[1].g[0] / F[0].v);
}

double curvature_residual(const TwistorSolution& sol, const ChartPoint& p) {
    require_pair(sol);
    const auto F = sol.eval(p);
    const auto& f = F[0];
    const auto& k = F[1];
    const double a = (f.h(1, 1) * k.v - f.g[1] * k.g[1]) / (k.v * k.v);
    const double b = (k.h(0, 0) * f.v - k.g[0] * f.g[0]) / (f.v * f.v);
    return std::abs(a + b + sol.epsilon * f.v * k.v);
}

double equation_residual(const TwistorSolution& sol, const std::string& eq, const ChartPoint& p) {
    if (eq == "3.5") return twisted_closed_residual(sol, p);
    if (eq == "3.8") return hstationary_residual(sol, p);
    if (eq == "6.1") return ratio_residual(sol, p);
    if (eq == "6.2") return closed_pair_residual(sol, p);
    if (eq == "6.3") return curvature_residual(sol, p);
    throw ConfigError("unknown equation '" + eq + "'");
}

double ResidualReport::max() const {
    double r = 0;
    for (const auto& e : equations) r = std::max(r, e.max);
    return r;
}

ResidualReport full_system_residual(const TwistorSolution& sol, const std::vector<ChartPoint>& grid,
                                    const std::vector<std::string>& equations) {
    ResidualReport rep;
    rep.solution = sol.id;
    rep.points = static_cast<int>(grid.size());
    for (const auto& eq : equations) {
        EquationResidual er;
        er.equation = eq;
        double sq = 0;
        for (const auto& p : grid) {
            const double r = equation_residual(sol, eq, p);
            er.max = std::max(er.max, r);
            sq += r * r;
        }
        er.rms = grid.empty() ? 0.0 : std::sqrt(sq / grid.size());
        rep.equations.push_back(er);
    }
    return rep;
}

std::vector<ChartPoint> solution_grid(const TwistorSolution& sol, int count, std::uint64_t seed) {
    GridSpec g;
    g.count = count;
    g.seed = seed;
    g.mode = SamplingMode::random;
    g.margin = 0.0;
    return sample_domain(sol.domain, g);
}

TwistorSolution scale_transform(const TwistorSolution& sol, double m, double c, ScaleMode mode, int sign) {
    if (!(m > 0) || std::abs(m - 1) < 1e-12) throw AdmissibilityError("scale transform needs m > 0, m != 1");
    if (sol.l != 2 || sol.dim != 2) throw DimensionError("scale transform acts on a pair of functions of (x, y)");
    TwistorSolution out = sol;
    out.params.set("m", m);
    const auto inner = sol.eval;
    std::vector<Interval> b = sol.domain.box;
    if (mode == ScaleMode::lemma61) {
        if (c == 0) throw AdmissibilityError("scale transform needs c != 0");
        out.params.set("c", c);
        out.id = sol.id + "/lemma61";
        out.traveling_wave = false;
        std::vector<std::string> keep;
        for (const auto& eq : sol.equations)
            if (eq == "6.1" || eq == "6.2" || eq == "3.5" || eq == "3.8") keep.push_back(eq);
        out.equations = keep;
        const double m2 = m * m;
        out.eval = [inner, m2, c, m](const ChartPoint& x) {
            auto F = inner({m2 * x[0], x[1]});
            Eigen::Matrix2d D = Eigen::Vector2d(m2, 1.0).asDiagonal();
            const double amp[2] = {c * m, c};
            for (int a = 0; a < 2; ++a) {
                F[a].v *= amp[a];
                F[a].g = amp[a] * (D * F[a].g);
                F[a].h = amp[a] * (D * F[a].h * D);
            }
            return F;
        };
        b[0] = {b[0].lo / m2, b[0].hi / m2};
        out.domain = sol.domain.pulled_back([m2](const ChartPoint& x) { return ChartPoint{m2 * x[0], x[1]}; }, b);
    } else {
        if (!sol.traveling_wave) throw AdmissibilityError(sol.id + ": the second transform needs a traveling-wave pair");
        if (sign != 1 && sign != -1) throw AdmissibilityError("sign must be +1 or -1");
        out.id = sol.id + "/lemma62";
        out.traveling_wave = false;
        out.equations = kFullSystem;
        const double m2 = m * m, r = std::sqrt(1 + m2);
        const double af = m * r / std::sqrt(2.0), ak = sign * r / std::sqrt(2.0);
        out.eval = [inner, m2, af, ak](const ChartPoint& x) {
            const auto G = inner({m2 * x[0] + x[1], 0.0});
            Eigen::Matrix2d M;
            M << m2, 1.0, 0.0, 0.0;
            std::vector<FunctionJet> F(2);
            const double amp[2] = {af, ak};
            for (int a = 0; a < 2; ++a) {
                F[a].v = amp[a] * G[0].v;
                F[a].g = amp[a] * (M.transpose() * G[0].g);
                F[a].h = amp[a] * (M.transpose() * G[0].h * M);
            }
            return F;
        };
        const double lo = b[0].lo + b[1].lo, hi = b[0].hi + b[1].hi;
        std::vector<Interval> nb(2, Interval{lo / (1 + m2), hi / (1 + m2)});
        out.domain = sol.domain.pulled_back([m2](const ChartPoint& x) { return ChartPoint{m2 * x[0] + x[1], 0.0}; }, nb);
    }
    return out;
}

bool type1_classifier(const TwistorSolution& sol, const std::vector<ChartPoint>& grid, double tol) {
    if (sol.l != 2) throw DimensionError("type classification needs a pair of twistor functions");
    double r = 0;
    for (const auto& p : grid) {
        const auto F = sol.eval(p);
        r = std::max(r, std::abs(F[0].v * F[0].v - F[1].v * F[1].v));
    }
    return r < tol;
}

double partials_fd_deviation(const TwistorSolution& sol, const ChartPoint& p, double step) {
    const auto F = sol.eval(p);
    const int n = static_cast<int>(p.size());
    auto shifted = [&](int j, double d) {
        ChartPoint q = p;
        q[j] += d;
        return sol.eval(q);
    };
    double r = 0;
    for (int j = 0; j < n; ++j) {
        const auto p1 = shifted(j, step), m1 = shifted(j, -step), p2 = shifted(j, 2 * step), m2 = shifted(j, -2 * step);
        for (size_t a = 0; a < F.size(); ++a) {
            const double d1 = (p1[a].v - m1[a].v) / (2 * step), d2 = (p2[a].v - m2[a].v) / (4 * step);
            r = std::max(r, std::abs((4 * d1 - d2) / 3 - F[a].g[j]) / std::max(1.0, std::abs(F[a].g[j])));
            for (int k = 0; k < n; ++k) {
                const double e1 = (p1[a].g[k] - m1[a].g[k]) / (2 * step), e2 = (p2[a].g[k] - m2[a].g[k]) / (4 * step);
                r = std::max(r, std::abs((4 * e1 - e2) / 3 - F[a].h(j, k)) / std::max(1.0, std::abs(F[a].h(j, k))));
            }
        }
    }
    return r;
}

double sech_lift_system_residual(const Jet2& jet, const ChartPoint& p, double m) {
    if (jet.n != 2) throw DimensionError("lift system needs a surface");
    const double r = std::sqrt(1 + m * m), u = (m * m * p[0] + p[1]) / r;
    const double T = std::tanh(u), S2 = 1 / (std::cosh(u) * std::cosh(u));
    const CVec& L = jet.value;
    const CVec& Lx = jet.grad[0];
    const CVec& Ly = jet.grad[1];
    const CVec e1 = jet.hess(0, 0) - (I * Lx - (m * m / r) * T * (Lx - Ly) - m * m * S2 * L);
    const CVec e2 = jet.hess(0, 1) + (T / r) * (Lx + m * m * Ly);
    const CVec e3 = jet.hess(1, 1) - (I * Ly + (T / r) * (Lx - Ly) - S2 * L);
    return std::max({e1.cwiseAbs().maxCoeff(), e2.cwiseAbs().maxCoeff(), e3.cwiseAbs().maxCoeff()});
}

double flat_lift_system_residual(const Jet2& jet, double b, double m) {
    if (jet.n != 2) throw DimensionError("lift system needs a surface");
    const CVec& Lx = jet.grad[0];
    const CVec& Ly = jet.grad[1];
    const double bm2 = b * m * m;
    const CVec e1 = jet.hess(0, 0) - (I + bm2) * Lx + bm2 * Ly;
    const CVec e2 = jet.hess(0, 1) - b * Lx - bm2 * Ly;
    const CVec e3 = jet.hess(1, 1) + b * Lx - (I + b) * Ly;
    return std::max({e1.cwiseAbs().maxCoeff(), e2.cwiseAbs().maxCoeff(), e3.cwiseAbs().maxCoeff()});
}

double lift_system_residual(LiftSystem system, const Jet2& jet, const ChartPoint& p, const ParamSet& params) {
    switch (system) {
        case LiftSystem::spherical_sech: return sech_lift_system_residual(jet, p, params.get("m"));
        case LiftSystem::flat_exponential: return flat_lift_system_residual(jet, params.get_or("b", 0.0), params.get("m"));
        case LiftSystem::none: break;
    }
    throw ConfigError("family declares no lift system");
}

}  // namespace hsl
