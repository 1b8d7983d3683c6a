#include <type_traits>

#include "family_util.hpp"

namespace hsl::fam {

namespace {

constexpr int kMaxDim = 6;

std::vector<ParamSpec> indexed_params(const std::string& base, double smoke, double lo, double hi) {
    std::vector<ParamSpec> out;
    for (int j = 1; j <= kMaxDim; ++j) out.push_back(real_param(indexed(base, j), base + std::to_string(j) + " > 0", smoke, lo, hi));
    return out;
}

bool positive_range(const ParamSet& p, const std::string& base, int from, int to) {
    for (int j = from; j <= to; ++j)
        if (!(p.get(indexed(base, j)) > 0)) return false;
    return true;
}

Family warped_a() {
    Family f;
    f.id = "cn.warped.a";
    f.label = "Theorem 4.1 (a)";
    f.title = "flat warped family (a_1 e^{ix_1}, ..., a_l e^{ix_l}, x_{l+1}, ..., x_n) in C^n";
    f.ambient = AmbientKind::flat;
    f.tier = Tier::A;
    f.params = {int_param("n", "1 <= n <= 6", 2), int_param("l", "0 <= l <= n", 1)};
    for (auto& s : indexed_params("a", 1.0, 0.5, 2.0)) f.params.push_back(s);
    f.predicates = {
        predicate("1 <= n <= 6", [](const ParamSet& p) { return p.integer("n") >= 1 && p.integer("n") <= kMaxDim; }),
        predicate("0 <= l <= n", [](const ParamSet& p) { return p.integer("l") >= 0 && p.integer("l") <= p.integer("n"); }),
        predicate("a_1, ..., a_l > 0", [](const ParamSet& p) { return positive_range(p, "a", 1, p.integer("l")); }),
    };
    f.dim = dim_from_n();
    f.domain = [](const ParamSet& p) { return box_domain(std::vector<Interval>(p.integer("n"), {-2.0, 2.0})); };
    f.variants = {exact_variant("as-printed", "", [](const ParamSet& p) {
        const int n = p.integer("n"), l = p.integer("l");
        std::vector<double> a(l);
        for (int j = 0; j < l; ++j) a[j] = p.get(indexed("a", j + 1));
        return [n, l, a](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            std::vector<S> out;
            for (int j = 0; j < l; ++j) out.push_back(exp(x[j] * I) * a[j]);
            for (int j = l; j < n; ++j) out.push_back(x[j]);
            return out;
        };
    })};
    f.adapted = adapted_first_l();
    f.metric = [](const ParamSet& p, const ChartPoint&) {
        std::vector<double> d(p.integer("n"), 1.0);
        for (int j = 0; j < p.integer("l"); ++j) d[j] = p.get(indexed("a", j + 1)) * p.get(indexed("a", j + 1));
        return diag_metric(d);
    };
    f.nullity = nullity_n_minus_l();
    return f;
}

// phase_shift(b) is the square root entering the two exponents; the amplitudes always use sqrt(1+4b^2).
template <class PhaseShift>
Variant warped_b_variant(std::string name, std::string note, PhaseShift phase_shift) {
    return exact_variant(std::move(name), std::move(note), [phase_shift](const ParamSet& p) {
        const int n = p.integer("n"), l = p.integer("l"), k = p.integer("k");
        std::vector<double> amp_lo(k), amp_hi(k), ph_lo(k), ph_hi(k), a(l, 0.0);
        for (int j = 0; j < k; ++j) {
            const double b = p.get(indexed("b", j + 1));
            const double s = sqrt(1 + 4 * b * b);
            const double q = phase_shift(b);
            amp_lo[j] = sqrt(s + 1) / (sqrt(2.0) * sqrt(s));
            amp_hi[j] = sqrt(s - 1) / (sqrt(2.0) * sqrt(s));
            ph_lo[j] = (1 - q) / 2;
            ph_hi[j] = (1 + q) / 2;
        }
        for (int j = k; j < l; ++j) a[j] = p.get(indexed("a", j + 1));
        return [=](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            std::vector<S> out;
            for (int j = 0; j < k; ++j) out.push_back(exp(x[j] * (I * ph_lo[j])) * x[l + j] * amp_lo[j]);
            for (int j = k; j < l; ++j) out.push_back(exp(x[j] * I) * a[j]);
            for (int j = l + k; j < n; ++j) out.push_back(x[j]);
            for (int j = 0; j < k; ++j) out.push_back(exp(x[j] * (I * ph_hi[j])) * x[l + j] * amp_hi[j]);
            return out;
        };
    });
}

Family warped_b() {
    Family f;
    f.id = "cn.warped.b";
    f.label = "Theorem 4.1 (b)";
    f.title = "flat warped family with k rotating pairs scaled by x_{l+1}, ..., x_{l+k} in C^n";
    f.ambient = AmbientKind::flat;
    f.tier = Tier::A;
    f.params = {int_param("n", "2 <= n <= 6", 2), int_param("l", "1 <= l <= n-1", 1), int_param("k", "1 <= k <= l, l+k <= n", 1)};
    for (auto& s : indexed_params("b", 0.3, 0.1, 1.5)) f.params.push_back(s);
    for (auto& s : indexed_params("a", 1.0, 0.5, 2.0)) f.params.push_back(s);
    f.predicates = {
        predicate("2 <= n <= 6", [](const ParamSet& p) { return p.integer("n") >= 2 && p.integer("n") <= kMaxDim; }),
        predicate("1 <= l <= n-1", [](const ParamSet& p) { return p.integer("l") >= 1 && p.integer("l") < p.integer("n"); }),
        predicate("1 <= k <= l and l+k <= n",
                  [](const ParamSet& p) {
                      const int k = p.integer("k");
                      return k >= 1 && k <= p.integer("l") && p.integer("l") + k <= p.integer("n");
                  }),
        predicate("b_1, ..., b_k > 0", [](const ParamSet& p) { return positive_range(p, "b", 1, p.integer("k")); }),
        predicate("a_{k+1}, ..., a_l > 0",
                  [](const ParamSet& p) { return positive_range(p, "a", p.integer("k") + 1, p.integer("l")); }),
    };
    f.dim = dim_from_n();
    f.domain = [](const ParamSet& p) {
        const int n = p.integer("n"), l = p.integer("l"), k = p.integer("k");
        std::vector<Interval> box(n, {-2.0, 2.0});
        for (int j = 0; j < k; ++j) box[l + j] = {0.3, 2.0};
        Domain d = box_domain(box);
        for (int j = 0; j < k; ++j)
            d.positive("x_" + std::to_string(l + j + 1) + " > 0", [l, j](const ChartPoint& x) { return x[l + j]; });
        return d;
    };
    f.variants = {
        warped_b_variant("as-printed", "exponents use sqrt(1-4b^2); not real once 4b^2 >= 1",
                         [](double b) {
                             if (4 * b * b >= 1)
                                 throw EvaluationError("exponent sqrt(1-4b^2) is not real for b = " + std::to_string(b));
                             return sqrt(1 - 4 * b * b);
                         }),
        warped_b_variant("phase-sqrt(1+4b^2)", "exponents use sqrt(1+4b^2), matching the amplitudes",
                         [](double b) { return sqrt(1 + 4 * b * b); }),
    };
    f.adapted = adapted_first_l();
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const int n = p.integer("n"), l = p.integer("l"), k = p.integer("k");
        std::vector<double> d(n, 1.0);
        for (int j = 0; j < k; ++j) {
            const double b = p.get(indexed("b", j + 1));
            d[j] = b * b * x[l + j] * x[l + j];
        }
        for (int j = k; j < l; ++j) d[j] = p.get(indexed("a", j + 1)) * p.get(indexed("a", j + 1));
        return diag_metric(d);
    };
    f.nullity = nullity_n_minus_l();
    return f;
}

Family surface(std::string id, std::string label, std::string title, Tier tier) {
    Family f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.title = std::move(title);
    f.ambient = AmbientKind::flat;
    f.tier = tier;
    f.dim = fixed_dim(2);
    f.adapted = adapted_first(2);
    f.nullity = nullity_exact(0);
    return f;
}

Family type1_torus() {
    Family f = surface("c2.type1.torus", "Section 5, type I surfaces in C^2 (first form)", "product of circles a(e^{ix}, e^{iy})", Tier::A);
    f.params = {real_param("a", "a > 0", 1.0, 0.5, 2.0)};
    f.predicates = {predicate("a > 0", [](const ParamSet& p) { return p.get("a") > 0; })};
    f.domain = [](const ParamSet&) { return box_domain({{-2, 2}, {-2, 2}}); };
    f.variants = {exact_variant("as-printed", "", [](const ParamSet& p) {
        const double a = p.get("a");
        return [a](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            return std::vector<S>{exp(x[0] * I) * a, exp(x[1] * I) * a};
        };
    })};
    f.metric = [](const ParamSet& p, const ChartPoint&) { return diag_metric({p.get("a") * p.get("a"), p.get("a") * p.get("a")}); };
    f.twistor = TwistorBinding{"typeI.exp", [](const ParamSet& p) { return ParamSet{{"a", p.get("a")}, {"b", 0.0}}; }};
    return f;
}

Family type1_exp() {
    Family f = surface("c2.type1.exp", "Section 5, type I surfaces in C^2 (second form)",
                       "exponentially scaled rotating pair with f = k = a e^{b(x+y)}", Tier::A);
    f.params = {real_param("a", "a > 0", 1.0, 0.5, 2.0), real_param("b", "b real", 0.5, -1.0, 1.0)};
    f.predicates = {predicate("a > 0", [](const ParamSet& p) { return p.get("a") > 0; })};
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-1, 1}}); };
    auto make = [](bool printed) {
        return [printed](const ParamSet& p) {
            const double a = p.get("a"), b = p.get("b");
            const double q = sqrt(1 + 4 * b * b);
            const cplx growth = printed ? cplx(q / 2, 0.0) : cplx(b, 0.5);
            const double amp = sqrt(2.0) * a / q;
            return [=](const auto& x) {
                using S = std::decay_t<decltype(x[0])>;
                const S e = exp((x[0] + x[1]) * growth) * amp;
                const S t = (x[0] - x[1]) * (q / 2);
                return std::vector<S>{e * cos(t), e * sin(t)};
            };
        };
    };
    f.variants = {
        exact_variant("as-printed", "real exponential e^{sqrt(1+4b^2)(x+y)/2}", make(true)),
        exact_variant("phase-(b+i/2)", "exponential e^{(b+i/2)(x+y)}; metric a^2 e^{2b(x+y)}(dx^2+dy^2)", make(false)),
    };
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double v = p.get("a") * p.get("a") * exp(2 * p.get("b") * (x[0] + x[1]));
        return diag_metric({v, v});
    };
    f.twistor = TwistorBinding{"typeI.exp", [](const ParamSet& p) { return ParamSet{{"a", p.get("a")}, {"b", p.get("b")}}; }};
    return f;
}

std::vector<ParamPredicate> m_predicates() {
    return {predicate("m > 0", [](const ParamSet& p) { return p.get("m") > 0; }),
            predicate("m != 1", [](const ParamSet& p) { return std::abs(p.get("m") - 1) > 1e-12; })};
}

Family type2_exp() {
    Family f = surface("c2.type2.exp", "Section 7, flat type II family in C^2",
                       "flat type II surface over g = e^{2b(m^2x+y)}(m^2dx^2+dy^2)", Tier::A);
    f.params = {real_param("b", "b real", 0.5, -1.0, 1.0), real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = m_predicates();
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-1, 1}}); };
    f.variants = {exact_variant("as-printed", "", [](const ParamSet& p) {
        const double b = p.get("b"), m = p.get("m");
        const double s1 = sqrt(1 + 4 * b * b * m * m), s2 = sqrt(1 + b * b * (1 + m * m) * (1 + m * m));
        const double pre = 1 / sqrt(1 + m * m);
        return [=](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            const S e = exp((x[0] + x[1]) * (0.5 * I) + (x[0] * (m * m) + x[1]) * b) * pre;
            const S t = (x[0] - x[1]) * (s1 / 2);
            return std::vector<S>{e * sin(t) * (2 * m / s1),
                                  e * (cos(t) * ((1 + m * m) / s2) - sin(t) * (I * (1 - m * m) / (s1 * s2)))};
        };
    })};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), e = exp(2 * p.get("b") * (m * m * x[0] + x[1]));
        return diag_metric({m * m * e, e});
    };
    f.twistor = TwistorBinding{"6.13", [](const ParamSet& p) {
                                   return ParamSet{{"a", 1.0}, {"b", p.get("b")}, {"m", p.get("m")}};
                               }};
    f.lift_system = LiftSystem::flat_exponential;
    return f;
}

Family type2_exp0() {
    Family f = surface("c2.type2.exp0", "Section 7, flat type II family in C^2 with b = 0",
                       "flat type II surface over g = m^2dx^2+dy^2", Tier::A);
    f.params = {real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = m_predicates();
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{-1, 1}, {-1, 1}});
        d.nonzero("sin((x-y)/2) != 0", [](const ChartPoint& x) { return sin((x[0] - x[1]) / 2); });
        return d;
    };
    f.variants = {exact_variant("as-printed", "", [](const ParamSet& p) {
        const double m = p.get("m");
        const double pre = 1 / sqrt(1 + m * m);
        return [=](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            const S t = (x[0] - x[1]) * 0.5;
            const S e = exp((x[0] + x[1]) * (0.5 * I)) * sin(t) * pre;
            return std::vector<S>{e * (2 * m), e * (cos(t) / sin(t) * (1 + m * m) - cplx(0, 1 - m * m))};
        };
    })};
    f.metric = [](const ParamSet& p, const ChartPoint&) { return diag_metric({p.get("m") * p.get("m"), 1.0}); };
    f.twistor = TwistorBinding{"6.13", [](const ParamSet& p) {
                                   return ParamSet{{"a", 1.0}, {"b", 0.0}, {"m", p.get("m")}};
                               }};
    f.lift_system = LiftSystem::flat_exponential;
    return f;
}

Family bessel_surface() {
    Family f = surface("c2.bessel", "Section 8, Bessel-type surface in C^2",
                       "type II surface over the non-traveling-wave solution with c != 0", Tier::B);
    f.params = {real_param("a", "a > 0", 1.0, 0.5, 2.0), real_param("c", "c != 0", 1.0, 0.5, 2.0)};
    f.predicates = {predicate("a > 0", [](const ParamSet& p) { return p.get("a") > 0; }),
                    predicate("c != 0", [](const ParamSet& p) { return p.get("c") != 0; })};
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{0.3, 1.5}, {0.2, 1.3}});
        d.positive("r > 0", [](const ChartPoint& x) { return x[0]; });
        d.positive("sin(2 theta) > 0", [](const ChartPoint& x) { return sin(2 * x[1]); });
        return d;
    };
    f.variants = {variant("as-printed", "closed form in (r, theta) with x = 2r^2 cos^2 theta, y = -2r^2 sin^2 theta",
                          [](const ParamSet&) -> MapFn {
                              return [](const ChartPoint&) -> CVec {
                                  throw EvaluationError(
                                      "the two angular factors T_c^+ and T_c^- of the closed form are never defined, "
                                      "so the surface cannot be evaluated");
                              };
                          })};
    f.adapted = {};
    f.known_issue = "closed form references the angular factors T_c^+(r,theta), T_c^-(r,theta) without defining them; "
                    "evaluation unavailable";
    return f;
}

}  // namespace

void add_flat_families(std::vector<Family>& out) {
    out.push_back(warped_a());
    out.push_back(warped_b());
    out.push_back(type1_torus());
    out.push_back(type1_exp());
    out.push_back(type2_exp());
    out.push_back(type2_exp0());
    out.push_back(bessel_surface());
}

}  // namespace hsl::fam
