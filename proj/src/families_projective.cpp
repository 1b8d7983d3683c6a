#include "family_util.hpp"

namespace hsl::fam {

namespace {

constexpr int kMaxCurves = 6;

std::vector<ParamSpec> curve_params() {
    std::vector<ParamSpec> out;
    for (int j = 1; j <= kMaxCurves; ++j)
        out.push_back(real_param(indexed("a", j), "a" + std::to_string(j) + " > 0", 0.5 + 0.25 * (j - 1), 0.3, 1.5));
    return out;
}

std::vector<double> curve_speeds(const ParamSet& p, int count) {
    std::vector<double> a(count);
    for (int j = 0; j < count; ++j) a[j] = p.get(indexed("a", j + 1));
    return a;
}

ParamPredicate speeds_positive() {
    return predicate("a_1, ..., a_l > 0", [](const ParamSet& p) {
        for (int j = 1; j <= p.integer("l"); ++j)
            if (!(p.get(indexed("a", j)) > 0)) return false;
        return true;
    });
}

// Metric sum_j a_j^2 c_j^2 dx_j^2 + (round metric on the angle block), angles starting at chart index l.
Eigen::MatrixXd sphere_warped_metric(const std::vector<double>& a, const ChartPoint& x, int l, int n) {
    const int N = n - l;
    const auto c = sphere_components(&x[l], N);
    const auto s = sphere_metric_diagonal(&x[l], N);
    std::vector<double> d(n);
    for (int j = 0; j < l; ++j) d[j] = a[j] * a[j] * c[j] * c[j];
    for (int r = 0; r < N; ++r) d[l + r] = s[r];
    return diag_metric(d);
}

Family cpn_warped_a() {
    Family f;
    f.id = "cpn.warped.a";
    f.label = "Theorem 4.2 (a)";
    f.title = "constant curvature one warped family in CP^n, l <= (n+1)/2";
    f.ambient = AmbientKind::spherical;
    f.tier = Tier::B;
    f.params = {int_param("n", "2 <= n <= 6", 3), int_param("l", "1 <= l <= (n+1)/2", 2)};
    for (auto& s : curve_params()) f.params.push_back(s);
    f.predicates = {
        predicate("2 <= n <= 6", [](const ParamSet& p) { return p.integer("n") >= 2 && p.integer("n") <= 6; }),
        predicate("1 <= l <= (n+1)/2", [](const ParamSet& p) { return p.integer("l") >= 1 && 2 * p.integer("l") <= p.integer("n") + 1; }),
        speeds_positive(),
    };
    f.dim = dim_from_n();
    f.domain = [](const ParamSet& p) {
        const int n = p.integer("n"), l = p.integer("l");
        std::vector<Interval> box(n, {-2.0, 2.0});
        for (int r = l; r < n; ++r) box[r] = {0.15, 1.4};
        Domain d = box_domain(box);
        add_angle_constraints(d, l, n);
        return d;
    };
    auto make = [](bool printed) {
        return [printed](const ParamSet& p) -> MapFn {
            const int n = p.integer("n"), l = p.integer("l");
            const auto a = curve_speeds(p, l);
            return [=](const ChartPoint& x) {
                const auto c = sphere_components(&x[l], n - l);
                std::vector<Pair> curves(l);
                for (int j = 0; j < l; ++j) curves[j] = sphere_curve(a[j], x[j]);
                std::vector<cplx> out;
                if (printed) {
                    // every A_j carries the same factor cos(theta_{l+1})
                    for (int j = 0; j < l; ++j) out.push_back(curves[j].first * cos(x[l]));
                    for (int j = 0; j < l; ++j) out.push_back(curves[j].second * c[j]);
                    for (size_t r = l; r < c.size(); ++r) out.push_back(c[r]);
                } else {
                    append_twisted_sphere(out, curves, c, 1.0);
                }
                return to_cvec(out);
            };
        };
    };
    f.variants = {
        variant("as-printed", "A_j multiplied by cos(theta_{l+1}) for every j", make(true)),
        variant("paired-components", "A_j multiplied by the same sphere component as B_j", make(false)),
    };
    f.adapted = adapted_first_l();
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        return sphere_warped_metric(curve_speeds(p, p.integer("l")), x, p.integer("l"), p.integer("n"));
    };
    f.nullity = nullity_n_minus_l();
    return f;
}

Family cpn_warped_b() {
    Family f;
    f.id = "cpn.warped.b";
    f.label = "Theorem 4.2 (b)";
    f.title = "constant curvature one warped family in CP^n with n = 2l-1";
    f.ambient = AmbientKind::spherical;
    f.tier = Tier::B;
    f.params = {int_param("l", "2 <= l <= 3", 2)};
    for (auto& s : curve_params()) f.params.push_back(s);
    f.predicates = {
        predicate("n = 2l-1 >= 3 (2 <= l <= 3)", [](const ParamSet& p) { return p.integer("l") >= 2 && p.integer("l") <= 3; }),
        speeds_positive(),
    };
    f.dim = [](const ParamSet& p) { return 2 * p.integer("l") - 1; };
    f.domain = [](const ParamSet& p) {
        const int l = p.integer("l"), n = 2 * l - 1;
        std::vector<Interval> box(n, {-2.0, 2.0});
        for (int r = l; r < n; ++r) box[r] = {0.15, 1.4};
        Domain d = box_domain(box);
        add_angle_constraints(d, l, n);
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const int l = p.integer("l"), n = 2 * l - 1;
        const auto a = curve_speeds(p, l);
        return [=](const ChartPoint& x) {
            const auto c = sphere_components(&x[l], n - l);
            std::vector<cplx> out;
            for (int j = 0; j < l; ++j) out.push_back(sphere_curve(a[j], x[j]).first * c[j]);
            for (int j = 0; j < l; ++j) out.push_back(I * sphere_curve(a[j], x[j]).second * c[j]);
            return to_cvec(out);
        };
    })};
    f.adapted = adapted_first_l();
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const int l = p.integer("l");
        return sphere_warped_metric(curve_speeds(p, l), x, l, 2 * l - 1);
    };
    f.nullity = [](const ParamSet& p) { return NullitySpec{p.integer("l") - 1, false}; };
    return f;
}

Family cp2_type1() {
    Family f;
    f.id = "cp2.type1";
    f.label = "Section 5, type I surfaces in CP^2";
    f.title = "type I surface with f = k = sech";
    f.ambient = AmbientKind::spherical;
    f.tier = Tier::A;
    f.params = {real_param("b", "b > 0", 1.0, 0.5, 3.0)};
    f.predicates = {predicate("b > 0", [](const ParamSet& p) { return p.get("b") > 0; })};
    f.dim = fixed_dim(2);
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-1, 1}}); };
    auto make = [](bool adapted) {
        return [adapted](const ParamSet& p) -> MapFn {
            const double b = p.get("b");
            const double alpha = 0.5 * sqrt(4 + b * b);
            const double scale = adapted ? 1 / b : 1.0;
            return [=](const ChartPoint& x) {
                const double s = (x[0] + x[1]) * scale, t = (x[0] - x[1]) * scale;
                const cplx e = cis(b * s / 2) * sech(s);
                CVec v(3);
                v << (I * b / 2.0 + tanh(s)) / alpha, e * cos(alpha * t) / alpha, e * sin(alpha * t) / alpha;
                return v;
            };
        };
    };
    f.variants = {
        variant("as-printed", "chart (x, y) as printed; h(d_x, d_x) = b J d_x there", make(false)),
        variant("adapted-chart", "same surface in the chart (bx, by), where h(d_j, d_j) = J d_j", make(true)),
    };
    f.adapted = adapted_first(2);
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double b = p.get("b"), v = 2 / (b * b) * sech((x[0] + x[1]) / b) * sech((x[0] + x[1]) / b);
        return diag_metric({v, v});
    };
    f.nullity = nullity_exact(0);
    f.twistor = TwistorBinding{"typeI.sech", [](const ParamSet& p) { return ParamSet{{"c1", sqrt(2.0) / p.get("b")}}; }};
    return f;
}

Family cp2_type2_sech() {
    Family f;
    f.id = "cp2.type2.sech";
    f.label = "Section 7, type II family in CP^2";
    f.title = "type II surface over g = sech^2(u)(m^2dx^2+dy^2), u = (m^2x+y)/sqrt(1+m^2)";
    f.ambient = AmbientKind::spherical;
    f.tier = Tier::A;
    f.params = {real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = {predicate("m > 0", [](const ParamSet& p) { return p.get("m") > 0; }),
                    predicate("m != 1", [](const ParamSet& p) { return std::abs(p.get("m") - 1) > 1e-12; })};
    f.dim = fixed_dim(2);
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-1, 1}}); };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double m = p.get("m");
        const double r = sqrt(1 + m * m), q = sqrt(1 + 5 * m * m), w = q / (2 * r);
        return [=](const ChartPoint& x) {
            const double u = (m * m * x[0] + x[1]) / r, t = x[0] - x[1];
            const cplx e = cis((x[0] + x[1]) / 2);
            const double pre = sech(u) / sqrt(2 + m * m);
            CVec v(3);
            v << pre * 2 * m * sqrt(2 + m * m) / q * e * sin(w * t),
                pre * e * (r * cos(w * t) - I * (1 - m * m) / q * sin(w * t)),
                pre * sqrt(1 + cosh(2 * u)) / sqrt(2.0) * (1.0 - I * r * tanh(u));
            return v;
        };
    })};
    f.adapted = adapted_first(2);
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), s = sech((m * m * x[0] + x[1]) / sqrt(1 + m * m));
        return diag_metric({m * m * s * s, s * s});
    };
    f.nullity = nullity_exact(0);
    f.twistor = TwistorBinding{"6.11", [](const ParamSet& p) { return ParamSet{{"c", 1.0}, {"m", p.get("m")}}; }};
    f.lift_system = LiftSystem::spherical_sech;
    return f;
}

}  // namespace

void add_projective_families(std::vector<Family>& out) {
    out.push_back(cpn_warped_a());
    out.push_back(cpn_warped_b());
    out.push_back(cp2_type1());
    out.push_back(cp2_type2_sech());
}

}  // namespace hsl::fam
