#include "family_util.hpp"

namespace hsl::fam {

namespace {

Family nullity_family(std::string id, std::string label, std::string title, AmbientKind ambient) {
    Family f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.title = std::move(title);
    f.ambient = ambient;
    f.tier = Tier::B;
    f.dim = fixed_dim(3);
    f.nullity = nullity_positive();
    return f;
}

ParamPredicate positive(const std::string& name) {
    return predicate(name + " > 0", [name](const ParamSet& p) { return p.get(name) > 0; });
}

CVec vec4(cplx a, cplx b, cplx c, cplx d) {
    CVec v(4);
    v << a, b, c, d;
    return v;
}

// Shared pieces of the (s, y, z) charts over the Poincare ball.
struct Ball {
    double D, R;
    explicit Ball(const ChartPoint& x) : D(1 - x[1] * x[1] - x[2] * x[2]), R(1 + x[1] * x[1] + x[2] * x[2]) {}
};

Domain ball_domain(double r) {
    Domain d = box_domain({{-2, 2}, {-r, r}, {-r, r}});
    d.positive("y^2 + z^2 < 1", [](const ChartPoint& x) { return 1 - x[1] * x[1] - x[2] * x[2]; });
    return d;
}

// ---- CP^3 ----

Family cp3_geodesic() {
    Family f = nullity_family("cp3.nullity.1", "Theorem 9.1 (1)", "totally geodesic real projective 3-space", AmbientKind::spherical);
    f.domain = [](const ParamSet&) {
        Domain d = box_domain({{0.2, 1.3}, {-2, 2}, {-2, 2}});
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet&) -> MapFn {
        return [](const ChartPoint& x) {
            return vec4(cos(x[0]) * cos(x[1]), cos(x[0]) * sin(x[1]), sin(x[0]) * cos(x[2]), sin(x[0]) * sin(x[2]));
        };
    })};
    f.nullity = nullity_exact(3);
    return f;
}

Family cp3_item2() {
    Family f = nullity_family("cp3.nullity.2", "Theorem 9.1 (2)", "three-parameter family over the (x, y) plane",
                              AmbientKind::spherical);
    f.params = {real_param("a", "a real", 1.0, -1.5, 1.5), real_param("b", "b^2 + c^2 > 0", 0.6, 0.2, 1.5),
                real_param("c", "b^2 + c^2 > 0", 0.3, -1.0, 1.0)};
    f.predicates = {predicate("b^2 + c^2 > 0", [](const ParamSet& p) { return std::hypot(p.get("b"), p.get("c")) > 0; })};
    f.domain = [](const ParamSet& p) {
        const double a = p.get("a"), b = p.get("b"), c = p.get("c");
        Domain d = box_domain({{-0.4, 0.4}, {-0.4, 0.4}, {-2, 2}});
        d.nonzero("phi != 0", [=](const ChartPoint& x) {
            return (a * (1 - x[0] * x[0] - x[1] * x[1]) + b * x[0] + c * x[1]) / (1 + x[0] * x[0] + x[1] * x[1]);
        });
        return d;
    };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double a = p.get("a"), b = p.get("b"), c = p.get("c");
        const double C = std::hypot(b, c), K = 4 * a * a + C * C, delta = 0.5 * sqrt(1 + K);
        return [=](const ChartPoint& v) {
            const double x = v[0], y = v[1], s = v[2], R = 1 + x * x + y * y, Q = 1 - x * x - y * y;
            const double phi = (a * Q + b * x + c * y) / R;
            const cplx e = cis(s / 2), shift = (C + 2.0 * I * a) * phi / (C * K);
            return vec4(phi * e * sin(delta * s) / delta,
                        phi * e * (2 * delta * cos(delta * s) - I * sin(delta * s)) / (delta * sqrt(K)),
                        (2 * C * x + I * b * Q) / (C * R) - 2 * b * shift, (2 * C * y + I * c * Q) / (C * R) - 2 * c * shift);
        };
    })};
    return f;
}

Family cp3_item3() {
    Family f = nullity_family("cp3.nullity.3", "Theorem 9.1 (3)", "cone over a sech Legendrian surface",
                              AmbientKind::spherical);
    f.params = {real_param("b", "b > 0", 0.7, 0.2, 2.0)};
    f.predicates = {positive("b")};
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-2, 2}, {-2, 2}}); };
    auto make = [](bool printed) {
        return [printed](const ParamSet& p) -> MapFn {
            const double b = p.get("b"), r = sqrt(2 * b), q = sqrt(1 + 2 * b);
            const double norm = printed ? sqrt(2 + 4 * b) : sqrt(2 * b + 4 * b * b);
            return [=](const ChartPoint& v) {
                const double x = v[0], s = v[1], t = v[2];
                const cplx w = r * cis(s / r) * sech(s) / q;
                return vec4(sin(x), cos(x) * (2 * b * tanh(s) + I * r) / norm, cos(x) * w * cos(q * t / r),
                            cos(x) * w * sin(q * t / r));
            };
        };
    };
    f.variants = {variant("as-printed", "second entry normalised by sqrt(2+4b)", make(true)),
                  variant("normalised", "second entry normalised by sqrt(2b+4b^2)", make(false))};
    return f;
}

Family cp3_item4() {
    Family f = nullity_family("cp3.nullity.4", "Theorem 9.1 (4)", "join of two Legendrian circles", AmbientKind::spherical);
    f.params = {real_param("a", "a > 0", 0.7, 0.3, 1.5), real_param("b", "b > 0", 1.1, 0.3, 1.5)};
    f.predicates = {positive("a"), positive("b")};
    f.domain = [](const ParamSet&) { return box_domain({{0.2, 1.3}, {-2, 2}, {-2, 2}}); };
    auto make = [](bool printed) {
        return [printed](const ParamSet& p) -> MapFn {
            const double a = p.get("a"), b = p.get("b");
            return [=](const ChartPoint& v) {
                const double x = v[0];
                const Pair ca = sphere_curve(a, v[1]), cb = sphere_curve(b, v[2]);
                if (printed) {
                    auto plus = [](double c, double y) {
                        const double s = sqrt(1 + 4 * c * c);
                        return cis(y / 2) * (cos(s * y / 2) + I * sin(s * y / 2) / s);
                    };
                    return vec4(plus(a, v[1]) * cos(x), ca.first * cos(x), cb.first * cos(x), plus(b, v[2]) * sin(x));
                }
                return vec4(ca.second * cos(x), ca.first * cos(x), cb.first * sin(x), cb.second * sin(x));
            };
        };
    };
    f.variants = {variant("as-printed", "curve entries e^{iy/2}(cos + i sin/s); third entry carries cos x", make(true)),
                  variant("consistent", "curve entries e^{iy/2}(cos - i sin/s); the second circle carries sin x", make(false))};
    return f;
}

// ---- CH^3 ----

Family ch3_geodesic() {
    Family f = nullity_family("ch3.nullity.1", "Theorem 9.2 (1)", "totally geodesic real hyperbolic 3-space",
                              AmbientKind::hyperbolic);
    f.domain = [](const ParamSet&) { return box_domain({{0.3, 1.5}, {0.3, 2.8}, {-2, 2}}); };
    f.variants = {variant("as-printed", "", [](const ParamSet&) -> MapFn {
        return [](const ChartPoint& v) {
            const double x = v[0], y = v[1], z = v[2];
            return vec4(cosh(x), sinh(x) * cos(y), sinh(x) * sin(y) * cos(z), sinh(x) * sin(y) * sin(z));
        };
    })};
    f.nullity = nullity_exact(3);
    return f;
}

Family ch3_item2() {
    Family f = nullity_family("ch3.nullity.2", "Theorem 9.2 (2)", "parabolic family over the Poincare disc",
                              AmbientKind::hyperbolic);
    f.params = {real_param("b", "b real", 0.7, -1.5, 1.5)};
    f.domain = [](const ParamSet&) { return ball_domain(0.6); };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double b = p.get("b"), r = sqrt(1 + b * b);
        return [=](const ChartPoint& v) {
            const Ball B(v);
            const double s = v[0], y = v[1], z = v[2];
            const cplx w = cis(s / 2) * (2 * b * y + r * B.R);
            return CVec(vec4((2.0 * I + s) * w, s * w, 4 * r * y + 2 * b * B.R, 4 * z) / (2 * B.D));
        };
    })};
    return f;
}

Family ch3_item3() {
    Family f = nullity_family("ch3.nullity.3", "Theorem 9.2 (3)", "hyperbolic-type family over the Poincare disc",
                              AmbientKind::hyperbolic);
    f.params = {real_param("a", "4a^2 - b^2 > 1", 1.0, 0.7, 1.5), real_param("b", "4a^2 - b^2 > 1", 0.5, -0.8, 0.8)};
    f.predicates = {predicate("4a^2 - b^2 > 1", [](const ParamSet& p) {
        return 4 * p.get("a") * p.get("a") - p.get("b") * p.get("b") > 1;
    })};
    f.domain = [](const ParamSet&) { return ball_domain(0.6); };
    auto make = [](double sign) {
        return [sign](const ParamSet& p) -> MapFn {
            const double a = p.get("a"), b = p.get("b"), k = sqrt(4 * a * a - b * b), d = 0.5 * sqrt(k * k - 1);
            return [=](const ChartPoint& v) {
                const Ball B(v);
                const double s = v[0], y = v[1], z = v[2];
                const cplx w = cis(s / 2) * (b * y + a * B.R);
                return CVec(vec4(w * (2 * d * cosh(d * s) - I * sinh(d * s)) / (d * k), w * sinh(d * s) / d,
                                 (4 * a * y + sign * b * B.R) / k, 2 * z) /
                            B.D);
            };
        };
    };
    f.variants = {variant("as-printed", "third entry (4ay - b(1+y^2+z^2))/sqrt(4a^2-b^2)", make(-1)),
                  variant("plus-sign", "third entry (4ay + b(1+y^2+z^2))/sqrt(4a^2-b^2)", make(1))};
    return f;
}

Family ch3_item4() {
    Family f = nullity_family("ch3.nullity.4", "Theorem 9.2 (4)", "elliptic-type family over the Poincare disc",
                              AmbientKind::hyperbolic);
    f.params = {real_param("a", "b^2 < 4a^2 < 1 + b^2", 0.5, 0.35, 0.55), real_param("b", "b^2 < 4a^2 < 1 + b^2", 0.6, 0.1, 0.65)};
    f.predicates = {predicate("4a^2 < 1 + b^2", [](const ParamSet& p) {
                        return 4 * p.get("a") * p.get("a") < 1 + p.get("b") * p.get("b");
                    }),
                    predicate("4a^2 > b^2", [](const ParamSet& p) { return 4 * p.get("a") * p.get("a") > p.get("b") * p.get("b"); })};
    f.domain = [](const ParamSet&) { return ball_domain(0.6); };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double a = p.get("a"), b = p.get("b"), k = sqrt(4 * a * a - b * b), g = 0.5 * sqrt(1 + b * b - 4 * a * a);
        return [=](const ChartPoint& v) {
            const Ball B(v);
            const double s = v[0], y = v[1], z = v[2];
            const cplx w = cis(s / 2) * (b * y + a * B.R);
            return CVec(vec4(w * (2 * g * cos(g * s) - I * sin(g * s)) / (g * k), w * sin(g * s) / g,
                             (4 * a * y + b * B.R) / k, 2 * z) /
                        B.D);
        };
    })};
    return f;
}

Family ch3_item5() {
    Family f = nullity_family("ch3.nullity.5", "Theorem 9.2 (5)", "horocyclic family with a^2 > 1", AmbientKind::hyperbolic);
    f.params = {real_param("a", "a^2 > 1", 2.0, 1.2, 3.0)};
    f.predicates = {predicate("a^2 > 1", [](const ParamSet& p) { return p.get("a") * p.get("a") > 1; })};
    f.domain = [](const ParamSet&) { return ball_domain(0.6); };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double a = p.get("a"), k = sqrt(a * a - 1);
        return [=](const ChartPoint& v) {
            const Ball B(v);
            const double s = v[0], y = v[1], z = v[2], Q = (1 + y) * (1 + y) + z * z;
            return vec4((2 * y - a * a * (1.0 + I * s) * Q) / (k * B.D), 2 * z / B.D, (B.R + I * a * a * s * Q) / (k * B.D),
                        a * cis(s) * Q / B.D);
        };
    })};
    return f;
}

Family ch3_item6() {
    Family f = nullity_family("ch3.nullity.6", "Theorem 9.2 (6)", "parameter-free horocyclic family", AmbientKind::hyperbolic);
    f.domain = [](const ParamSet&) { return ball_domain(0.6); };
    f.variants = {variant("as-printed", "", [](const ParamSet&) -> MapFn {
        return [](const ChartPoint& v) {
            const Ball B(v);
            const double s = v[0], y = v[1], z = v[2], Q = (1 + y) * (1 + y) + z * z;
            const cplx is = I * s;
            return vec4(is / 2.0 + 1.5 - I + (2.0 * I - 3.0 - is + (2.0 * I - 2.0 - is) * y) / B.D, 2 * z / B.D,
                        is / 2.0 - 0.5 - I + (1.0 + 2.0 * I - is + (2.0 + 2.0 * I - is) * y) / B.D, cis(s) * Q / B.D);
        };
    })};
    return f;
}

Domain sec_domain() {
    Domain d = box_domain({{-1, 1}, {-1.2, 1.2}, {-2, 2}});
    d.nonzero("cos s != 0", [](const ChartPoint& x) { return cos(x[1]); });
    return d;
}

Family ch3_item7() {
    Family f = nullity_family("ch3.nullity.7", "Theorem 9.2 (7)", "cone family with 0 < 2b < 1", AmbientKind::hyperbolic);
    f.params = {real_param("b", "0 < 2b < 1", 0.3, 0.05, 0.45)};
    f.predicates = {predicate("0 < 2b < 1", [](const ParamSet& p) { return p.get("b") > 0 && 2 * p.get("b") < 1; })};
    f.domain = [](const ParamSet&) { return sec_domain(); };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const double b = p.get("b"), r = sqrt(2 * b), q = sqrt(1 - 2 * b);
        return [=](const ChartPoint& v) {
            const double x = v[0], s = v[1], t = v[2];
            const cplx w = r * cis(s / r) * sec(s);
            return CVec(vec4(r * tan(s) - I, w * cos(q * t / r), w * sin(q * t / r), q * tanh(x)) * (cosh(x) / q));
        };
    })};
    return f;
}

Family ch3_item8() {
    Family f = nullity_family("ch3.nullity.8", "Theorem 9.2 (8)", "cone family with 2b > 1", AmbientKind::hyperbolic);
    f.params = {real_param("b", "2b > 1", 1.0, 0.6, 2.0)};
    f.predicates = {predicate("2b > 1", [](const ParamSet& p) { return 2 * p.get("b") > 1; })};
    f.domain = [](const ParamSet&) { return sec_domain(); };
    auto make = [](bool printed) {
        return [printed](const ParamSet& p) -> MapFn {
            const double b = p.get("b"), r = sqrt(2 * b), q = sqrt(2 * b - 1);
            if (printed)
                throw EvaluationError("prefactor 1/sqrt(1-2b) is not real for 2b > 1");
            return [=](const ChartPoint& v) {
                const double x = v[0], s = v[1], t = v[2];
                const cplx w = r * cis(s / r) * sec(s);
                return CVec(vec4(w * cosh(q * t / r), r * tan(s) - I, w * sinh(q * t / r), q * tanh(x)) * (cosh(x) / q));
            };
        };
    };
    f.variants = {variant("as-printed", "prefactor cosh(x)/sqrt(1-2b)", make(true)),
                  variant("real-prefactor", "prefactor cosh(x)/sqrt(2b-1)", make(false))};
    return f;
}

Family ch3_item9() {
    Family f = nullity_family("ch3.nullity.9", "Theorem 9.2 (9)", "parameter-free cone family", AmbientKind::hyperbolic);
    f.domain = [](const ParamSet&) { return sec_domain(); };
    f.variants = {variant("as-printed", "", [](const ParamSet&) -> MapFn {
        return [](const ChartPoint& v) {
            const double x = v[0], s = v[1], t = v[2];
            const cplx E = cis(2 * s), den = std::sqrt(2.0) * (1.0 + E);
            return CVec(vec4(I + 2.0 * E * (s + I + I * t * t), I + 2.0 * E * (s + I * t * t), den * tanh(x),
                             2 * std::sqrt(2.0) * E * t) *
                        (cosh(x) / den));
        };
    })};
    return f;
}

// Composition families: the variant composes with the default inner surface.
Family composition_family(std::string id, std::string label, std::string title, AmbientKind ambient, std::string inner) {
    Family f = nullity_family(std::move(id), std::move(label), std::move(title), ambient);
    f.composition = true;
    f.inner_default = inner;
    f.params = {real_param("m", "m > 0, m != 1", 2.0, 0.3, 3.0)};
    f.predicates = {predicate("m > 0", [](const ParamSet& p) { return p.get("m") > 0; }),
                    predicate("m != 1", [](const ParamSet& p) { return std::abs(p.get("m") - 1) > 1e-12; })};
    const std::string outer = f.id;
    f.domain = [outer, inner](const ParamSet& p) {
        return compose_with_inner(outer, instantiate(inner, ParamSet{{"m", p.get("m")}})).par.domain;
    };
    f.variants = {variant("as-printed", "", [outer, inner](const ParamSet& p) -> MapFn {
        return compose_with_inner(outer, instantiate(inner, ParamSet{{"m", p.get("m")}})).par.map;
    })};
    return f;
}

}  // namespace

void add_nullity_families(std::vector<Family>& out) {
    out.push_back(cp3_geodesic());
    out.push_back(cp3_item2());
    out.push_back(cp3_item3());
    out.push_back(cp3_item4());
    out.push_back(composition_family("cp3.nullity.5", "Theorem 9.1 (5)", "spherical join over a type II surface in CP^2",
                                     AmbientKind::spherical, "cp2.type2.sech"));
    out.push_back(ch3_geodesic());
    out.push_back(ch3_item2());
    out.push_back(ch3_item3());
    out.push_back(ch3_item4());
    out.push_back(ch3_item5());
    out.push_back(ch3_item6());
    out.push_back(ch3_item7());
    out.push_back(ch3_item8());
    out.push_back(ch3_item9());
    out.push_back(composition_family("ch3.nullity.10", "Theorem 9.2 (10)", "hyperbolic join over a type II surface in CH^2",
                                     AmbientKind::hyperbolic, "ch2.type2.e"));
}

}  // namespace hsl::fam
