#include "family_util.hpp"

namespace hsl::fam {

namespace {

Family ch2_surface(std::string id, std::string label, std::string title, Tier tier) {
    Family f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.title = std::move(title);
    f.ambient = AmbientKind::hyperbolic;
    f.tier = tier;
    f.dim = fixed_dim(2);
    f.adapted = adapted_first(2);
    f.nullity = nullity_exact(0);
    return f;
}

// Type I surfaces with f = k = lambda^{-1} F((X+Y)/lambda): the printed chart (x, y) and the
// adapted chart (X, Y) = lambda (x, y) are both registered.
using TypeOneEval = std::function<CVec(double s, double t)>;

std::vector<Variant> type_one_variants(std::function<TypeOneEval(const ParamSet&)> make, std::function<double(const ParamSet&)> lambda,
                                       const std::string& adapted_note) {
    auto build = [make, lambda](bool adapted) {
        return [make, lambda, adapted](const ParamSet& p) -> MapFn {
            const TypeOneEval e = make(p);
            const double scale = adapted ? 1 / lambda(p) : 1.0;
            return [e, scale](const ChartPoint& x) { return e((x[0] + x[1]) * scale, (x[0] - x[1]) * scale); };
        };
    };
    return {variant("as-printed", "chart (x, y) with s = x+y, t = x-y as printed", build(false)),
            variant("adapted-chart", adapted_note, build(true))};
}

Family ch2_type1_i() {
    Family f = ch2_surface("ch2.type1.i", "Section 5, type I surfaces in CH^2 (first form)", "type I surface with f = k = sec, b > 2",
                           Tier::A);
    f.params = {real_param("b", "b > 2", 3.0, 2.2, 4.0)};
    f.predicates = {predicate("b > 2", [](const ParamSet& p) { return p.get("b") > 2; })};
    f.domain = [](const ParamSet& p) {
        Domain d = box_domain({{-0.5, 0.5}, {-0.5, 0.5}});
        const double b = p.get("b");
        d.nonzero("cos(x+y) != 0", [](const ChartPoint& x) { return cos(x[0] + x[1]); });
        d.nonzero("cos((x+y)/b) != 0", [b](const ChartPoint& x) { return cos((x[0] + x[1]) / b); });
        return d;
    };
    f.variants = type_one_variants(
        [](const ParamSet& p) -> TypeOneEval {
            const double b = p.get("b"), alpha = sqrt(b * b / 4 - 1);
            return [=](double s, double t) {
                CVec v(3);
                v << (I * b / 2.0 - tan(s)) / alpha, cis(b * s / 2) * cos(alpha * t) / cos(s) / alpha,
                    cis(b * s / 2) * sin(alpha * t) / cos(s) / alpha;
                return v;
            };
        },
        [](const ParamSet& p) { return p.get("b"); }, "chart (bx, by), where h(d_j, d_j) = J d_j");
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double b = p.get("b"), v = 2 / (b * b) * sec((x[0] + x[1]) / b) * sec((x[0] + x[1]) / b);
        return diag_metric({v, v});
    };
    f.twistor = TwistorBinding{"typeI.sec", [](const ParamSet& p) { return ParamSet{{"c", sqrt(2.0) / p.get("b")}}; }};
    return f;
}

Family ch2_type1_ii() {
    Family f = ch2_surface("ch2.type1.ii", "Section 5, type I surfaces in CH^2 (second form)",
                           "type I surface with f = k = sec, 0 < b < 2", Tier::A);
    f.params = {real_param("b", "0 < b < 2", 1.0, 0.8, 1.9)};
    f.predicates = {predicate("0 < b < 2", [](const ParamSet& p) { return p.get("b") > 0 && p.get("b") < 2; })};
    f.domain = [](const ParamSet& p) {
        Domain d = box_domain({{-0.5, 0.5}, {-0.5, 0.5}});
        const double b = p.get("b");
        d.nonzero("cos(x+y) != 0", [](const ChartPoint& x) { return cos(x[0] + x[1]); });
        d.nonzero("cos((x+y)/b) != 0", [b](const ChartPoint& x) { return cos((x[0] + x[1]) / b); });
        return d;
    };
    f.variants = type_one_variants(
        [](const ParamSet& p) -> TypeOneEval {
            const double b = p.get("b"), alpha = sqrt(1 - b * b / 4);
            return [=](double s, double t) {
                CVec v(3);
                v << cis(b * s / 2) * cosh(alpha * t) / cos(s) / alpha, (I * b / 2.0 - tan(s)) / alpha,
                    cis(b * s / 2) * sinh(alpha * t) / cos(s) / alpha;
                return v;
            };
        },
        [](const ParamSet& p) { return p.get("b"); }, "chart (bx, by), where h(d_j, d_j) = J d_j");
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double b = p.get("b"), v = 2 / (b * b) * sec((x[0] + x[1]) / b) * sec((x[0] + x[1]) / b);
        return diag_metric({v, v});
    };
    f.twistor = TwistorBinding{"typeI.sec", [](const ParamSet& p) { return ParamSet{{"c", sqrt(2.0) / p.get("b")}}; }};
    return f;
}

Family ch2_type1_iii() {
    Family f = ch2_surface("ch2.type1.iii", "Section 5, type I surfaces in CH^2 (third form)",
                           "type I surface with f = k = sec, quadratic in t", Tier::A);
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{-0.5, 0.5}, {-0.5, 0.5}});
        d.nonzero("cos(x+y) != 0", [](const ChartPoint& x) { return cos(x[0] + x[1]); });
        return d;
    };
    f.variants = type_one_variants(
        [](const ParamSet&) -> TypeOneEval {
            return [](double s, double t) {
                const cplx pre = cis(s) / cos(s), back = cis(-2 * s) / 4.0;
                CVec v(3);
                v << pre * (t * t / 2 + 0.75 + back - I * s / 2.0), pre * t, pre * I * (t * t / 2 - 0.25 + back - I * s / 2.0);
                return v;
            };
        },
        [](const ParamSet&) { return 2.0; }, "chart (2x, 2y), where h(d_j, d_j) = J d_j");
    f.metric = [](const ParamSet&, const ChartPoint& x) {
        const double v = 0.5 * sec((x[0] + x[1]) / 2) * sec((x[0] + x[1]) / 2);
        return diag_metric({v, v});
    };
    f.twistor = TwistorBinding{"typeI.sec", [](const ParamSet&) { return ParamSet{{"c", 1 / sqrt(2.0)}}; }};
    return f;
}

Family ch2_type1_iv() {
    Family f = ch2_surface("ch2.type1.iv", "Section 5, type I surfaces in CH^2 (fourth form)", "type I surface with f = k = csch",
                           Tier::A);
    f.params = {real_param("b", "b > 0", 1.0, 0.5, 2.0)};
    f.predicates = {predicate("b > 0", [](const ParamSet& p) { return p.get("b") > 0; })};
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{0.3, 1.5}, {0.3, 1.5}});
        d.positive("x+y > 0", [](const ChartPoint& x) { return x[0] + x[1]; });
        return d;
    };
    auto make = [](bool printed_denominator) {
        return [printed_denominator](const ParamSet& p) -> TypeOneEval {
            const double b = p.get("b"), alpha = sqrt(b * b / 4 + 1);
            return [=](double s, double t) {
                const double den = printed_denominator ? cosh(s) : sinh(s);
                CVec v(3);
                v << (I * b / 2.0 + 1 / tanh(s)) / alpha, cis(b * s / 2) * cos(alpha * t) / den / alpha,
                    cis(b * s / 2) * sin(alpha * t) / den / alpha;
                return v;
            };
        };
    };
    auto lambda = [](const ParamSet& p) { return p.get("b"); };
    auto printed = type_one_variants(make(true), lambda, "chart (bx, by), denominators cosh s as printed");
    auto fixed = type_one_variants(make(false), lambda, "chart (bx, by), denominators sinh s");
    printed[0].note = "denominators cosh s as printed";
    printed[1].name = "adapted-chart";
    fixed[0].name = "sinh-denominator";
    fixed[0].note = "denominators sinh s, printed chart";
    fixed[1].name = "sinh-denominator-adapted-chart";
    f.variants = {printed[0], printed[1], fixed[0], fixed[1]};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double b = p.get("b"), v = 2 / (b * b) * csch((x[0] + x[1]) / b) * csch((x[0] + x[1]) / b);
        return diag_metric({v, v});
    };
    f.twistor = TwistorBinding{"typeI.csch", [](const ParamSet& p) { return ParamSet{{"c", sqrt(2.0) / p.get("b")}}; }};
    return f;
}

Family ch2_type1_v() {
    Family f = ch2_surface("ch2.type1.v", "Section 5, type I surfaces in CH^2 (fifth form)", "type I surface with f = k = sqrt(2)/(x+y)",
                           Tier::A);
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{0.3, 1.5}, {0.3, 1.5}});
        d.positive("x+y > 0", [](const ChartPoint& x) { return x[0] + x[1]; });
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet&) -> MapFn {
        return [](const ChartPoint& x) {
            const double s = x[0] + x[1];
            CVec v(3);
            v << 2 / s + I, sqrt(2.0) * cis(x[0]) / s, sqrt(2.0) * cis(x[1]) / s;
            return v;
        };
    })};
    f.metric = [](const ParamSet&, const ChartPoint& x) {
        const double s = x[0] + x[1];
        return diag_metric({2 / (s * s), 2 / (s * s)});
    };
    f.twistor = TwistorBinding{"typeI.rational", [](const ParamSet&) { return ParamSet{}; }};
    return f;
}

std::vector<ParamPredicate> m_not_one() {
    return {predicate("m > 0", [](const ParamSet& p) { return p.get("m") > 0; }),
            predicate("m != 1", [](const ParamSet& p) { return std::abs(p.get("m") - 1) > 1e-12; })};
}

double wave(double m, const ChartPoint& x) { return (m * m * x[0] + x[1]) / sqrt(1 + m * m); }

Family ch2_type2_a() {
    Family f = ch2_surface("ch2.type2.a", "Section 7, type II surfaces in CH^2 (a)", "rational type II surface", Tier::A);
    f.params = {real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = m_not_one();
    f.domain = [](const ParamSet& p) {
        const double m = p.get("m");
        Domain d = box_domain({{0.3, 1.5}, {0.3, 1.5}});
        d.nonzero("m^2 x + y != 0", [m](const ChartPoint& x) { return m * m * x[0] + x[1]; });
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double m = p.get("m"), r = sqrt(1 + m * m);
        return [=](const ChartPoint& x) {
            const double v = m * m * x[0] + x[1];
            CVec out(3);
            out << 1.0 - I * (1 + m * m) / v, m * r / v * cis(x[0]), r / v * cis(x[1]);
            return out;
        };
    })};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), v = m * m * x[0] + x[1];
        return diag_metric({m * m * (1 + m * m) / (v * v), (1 + m * m) / (v * v)});
    };
    f.twistor = TwistorBinding{"6.19", [](const ParamSet& p) { return ParamSet{{"m", p.get("m")}}; }};
    return f;
}

Family ch2_type2_b() {
    Family f = ch2_surface("ch2.type2.b", "Section 7, type II surfaces in CH^2 (b)", "type II surface with m = 1/sqrt(3), sec profile",
                           Tier::A);
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{-1, 1}, {-1, 1}});
        d.nonzero("cos((x+3y)/(2 sqrt 3)) != 0", [](const ChartPoint& x) { return cos((x[0] + 3 * x[1]) / (2 * sqrt(3.0))); });
        return d;
    };
    auto make = [](bool printed) {
        return [printed](const ParamSet&) -> MapFn {
            return [printed](const ChartPoint& x) {
                const double u = (x[0] + 3 * x[1]) / (2 * sqrt(3.0));
                const cplx e = cis((x[0] + x[1]) / 2);
                const double pre = printed ? sech(u) : sec(u);
                const cplx third = printed ? sech(u) * (sqrt(3.0) + 2.0 * I * tan(u)) : sqrt(3.0) + 2.0 * I * tan(u);
                CVec v(3);
                v << pre * (x[0] - x[1] + 4.0 * I) / 2.0 * e, pre * (x[0] - x[1]) / 2 * e, third;
                return v;
            };
        };
    };
    f.variants = {variant("as-printed", "common factor sech(u) on all three entries", make(true)),
                  variant("sec-first-two", "factor sec(u) on the first two entries only", make(false))};
    f.metric = [](const ParamSet&, const ChartPoint& x) {
        const double s = sec((x[0] + 3 * x[1]) / (2 * sqrt(3.0)));
        return diag_metric({s * s / 3, s * s});
    };
    f.twistor = TwistorBinding{"6.17", [](const ParamSet&) { return ParamSet{{"c", 1.0}, {"m", 1 / sqrt(3.0)}}; }};
    return f;
}

Family ch2_type2_c() {
    Family f = ch2_surface("ch2.type2.c", "Section 7, type II surfaces in CH^2 (c)", "type II sec surface, 3m^2 > 1", Tier::B);
    f.params = {real_param("m", "3m^2 > 1, m != 1", 2.0, 0.7, 2.5)};
    f.predicates = m_not_one();
    f.predicates.push_back(predicate("3m^2 - 1 > 0", [](const ParamSet& p) { return 3 * p.get("m") * p.get("m") - 1 > 0; }));
    f.domain = [](const ParamSet& p) {
        const double m = p.get("m");
        Domain d = box_domain({{-0.5, 0.5}, {-0.5, 0.5}});
        d.nonzero("cos((m^2x+y)/sqrt(1+m^2)) != 0", [m](const ChartPoint& x) { return cos(wave(m, x)); });
        return d;
    };
    auto make = [](bool hyperbolic) {
        return [hyperbolic](const ParamSet& p) -> MapFn {
            const double m = p.get("m"), q = sqrt(3 * m * m - 1), alpha = q / (2 * sqrt(1 + m * m));
            return [=](const ChartPoint& x) {
                const double u = wave(m, x), t = alpha * (x[0] - x[1]);
                const double C = hyperbolic ? cosh(t) : cos(t), S = hyperbolic ? sinh(t) : sin(t);
                const cplx e = cis((x[0] + x[1]) / 2);
                CVec v(3);
                v << (sqrt(3 * m * m * m * m + 2 * m * m - 1) * C + I * (m * m - 1) * S) / (m * q) * e * sec(u),
                    2 * m * e / q * sec(u) * S, 1 / m + I * sqrt(1 + m * m) / m * tan(u);
                return v;
            };
        };
    };
    f.variants = {variant("as-printed", "", make(true)), variant("circular", "cos/sin in place of cosh/sinh", make(false))};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), s = sec(wave(m, x));
        return diag_metric({m * m * s * s, s * s});
    };
    f.twistor = TwistorBinding{"6.17", [](const ParamSet& p) { return ParamSet{{"c", 1.0}, {"m", p.get("m")}}; }};
    return f;
}

Family ch2_type2_d() {
    Family f = ch2_surface("ch2.type2.d", "Section 7, type II surfaces in CH^2 (d)", "type II sec surface, 3m^2 < 1", Tier::B);
    f.params = {real_param("m", "0 < m < 1/sqrt(3)", 0.5, 0.2, 0.55)};
    f.predicates = m_not_one();
    f.predicates.push_back(predicate("1 - 3m^2 > 0", [](const ParamSet& p) { return 1 - 3 * p.get("m") * p.get("m") > 0; }));
    f.domain = [](const ParamSet& p) {
        const double m = p.get("m");
        Domain d = box_domain({{-0.5, 0.5}, {-0.5, 0.5}});
        d.nonzero("cos((m^2x+y)/sqrt(1+m^2)) != 0", [m](const ChartPoint& x) { return cos(wave(m, x)); });
        return d;
    };
    // second_sin: sin instead of sinh in the second entry; flipped: i(m^2-1) instead of i(1-m^2)
    auto make = [](bool second_sin, bool flipped) {
        return [=](const ParamSet& p) -> MapFn {
            const double m = p.get("m"), q = sqrt(1 - 3 * m * m), beta = q / (2 * sqrt(1 + m * m));
            const double sign = flipped ? -1.0 : 1.0;
            return [=](const ChartPoint& x) {
                const double u = wave(m, x), t = beta * (x[0] - x[1]);
                const cplx e = cis((x[0] + x[1]) / 2);
                CVec v(3);
                v << (sqrt(1 - 2 * m * m - 3 * m * m * m * m) * cos(t) + sign * I * (1 - m * m) * sin(t)) / (m * q) * e * sec(u),
                    2 * m * e / q * sec(u) * (second_sin ? sin(t) : sinh(t)), 1 / m + I * sqrt(1 + m * m) / m * tan(u);
                return v;
            };
        };
    };
    f.variants = {variant("as-printed", "", make(false, false)),
                  variant("sin-second-entry", "sin(beta(x-y)) in the second entry", make(true, false)),
                  variant("continued-from-c", "sin in the second entry and i(m^2-1) in the first, the continuation of (c) to 3m^2 < 1",
                          make(true, true))};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), s = sec(wave(m, x));
        return diag_metric({m * m * s * s, s * s});
    };
    f.twistor = TwistorBinding{"6.17", [](const ParamSet& p) { return ParamSet{{"c", 1.0}, {"m", p.get("m")}}; }};
    return f;
}

Family ch2_type2_e() {
    Family f = ch2_surface("ch2.type2.e", "Section 7, type II surfaces in CH^2 (e)", "type II csch surface", Tier::A);
    f.params = {real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = m_not_one();
    f.domain = [](const ParamSet& p) {
        const double m = p.get("m");
        Domain d = box_domain({{0.2, 1.5}, {0.2, 1.5}});
        d.positive("m^2x + y > 0", [m](const ChartPoint& x) { return wave(m, x); });
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double m = p.get("m"), r = sqrt(1 + m * m), q = sqrt(1 + 5 * m * m), w = q / (2 * r);
        return [=](const ChartPoint& x) {
            const double u = wave(m, x), t = w * (x[0] - x[1]);
            const cplx e = cis((x[0] + x[1]) / 2);
            const double pre = csch(u) / sqrt(2 + m * m);
            CVec v(3);
            v << pre * (sinh(u) - I * r * cosh(u)), pre * e * (r * cos(t) + I * (m * m - 1) / q * sin(t)),
                pre * 2 * m * sqrt(2 + m * m) / q * e * sin(t);
            return v;
        };
    })};
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const double m = p.get("m"), s = csch(wave(m, x));
        return diag_metric({m * m * s * s, s * s});
    };
    f.twistor = TwistorBinding{"6.18", [](const ParamSet& p) { return ParamSet{{"c", 1.0}, {"m", p.get("m")}}; }};
    return f;
}

}  // namespace

void add_hyperbolic_surface_families(std::vector<Family>& out) {
    out.push_back(ch2_type1_i());
    out.push_back(ch2_type1_ii());
    out.push_back(ch2_type1_iii());
    out.push_back(ch2_type1_iv());
    out.push_back(ch2_type1_v());
    out.push_back(ch2_type2_a());
    out.push_back(ch2_type2_b());
    out.push_back(ch2_type2_c());
    out.push_back(ch2_type2_d());
    out.push_back(ch2_type2_e());
}

}  // namespace hsl::fam
