#include "family_util.hpp"

namespace hsl::fam {

namespace {

enum class Head { none, parabolic, hyperbolic, elliptic, horospherical };

// Deviations of printed closed forms from the consistent construction.
struct Misprint {
    bool reflected_third = false;   // third entry e^{ix/2}(cos - 2a sin/s) instead of the second curve entry
    bool sine_first_head = false;   // head (e^{ix/2}cosh sin(theta), e^{ix/2}sinh cosh(theta))
    bool second_speed_in_head = false;  // head second entry scaled by a_2 instead of a_1
    bool hyperbolic_elliptic = false;   // elliptic head written with cosh/sinh
    bool drop_last = false;         // final bare sphere component missing
};

struct Shape {
    Head head = Head::none;
    int n = 0;
    int l = 0;
    std::vector<double> a;  // a[0..l-1]
};

double head_speed(const Shape& s) {
    switch (s.head) {
        case Head::parabolic: return 0.5;
        case Head::hyperbolic:
        case Head::elliptic: return s.a[0];
        default: return 0.0;
    }
}

// Chart: x_1..x_l, theta_{l+1} at index l, remaining angles after it.
CVec evaluate(const Shape& s, const Misprint& mp, const ChartPoint& x) {
    const int n = s.n, l = s.l;
    const double th = x[l], ch = cosh(th), sh = sinh(th);
    std::vector<cplx> out;
    int first_curve = 1;
    int first_angle = l + 1;
    double tail_scale = sh;
    switch (s.head) {
        case Head::none:
            out.push_back(ch);
            first_curve = 0;
            break;
        case Head::parabolic: {
            const Pair h = parabolic_curve(x[0]);
            out.push_back(h.first * ch);
            out.push_back(h.second * ch);
            break;
        }
        case Head::hyperbolic: {
            const double a = s.a[0], t = sqrt(4 * a * a - 1);
            const cplx e = cis(x[0] / 2);
            if (mp.sine_first_head) {
                out.push_back(e * cosh(t * x[0] / 2) * sin(th));
                out.push_back(e * sinh(t * x[0] / 2) * ch);
            } else {
                const Pair h = hyperbolic_curve(a, x[0]);
                const double q_scale = mp.second_speed_in_head ? s.a[1] / a : 1.0;
                out.push_back(h.first * ch);
                out.push_back(h.second * ch * q_scale);
            }
            break;
        }
        case Head::elliptic: {
            const double a = s.a[0], t = sqrt(1 - 4 * a * a);
            const cplx e = cis(x[0] / 2);
            if (mp.hyperbolic_elliptic) {
                out.push_back(e * (cosh(t * x[0] / 2) - I * sinh(t * x[0] / 2) / t) * ch);
                out.push_back(2 * a * e * sinh(t * x[0] / 2) / t * ch);
            } else {
                const Pair h = elliptic_curve(a, x[0]);
                out.push_back(h.first * ch);
                out.push_back(h.second * ch);
            }
            break;
        }
        case Head::horospherical: {
            const double a = s.a[0], phi = x[l + 1];
            const double w = sh * sin(phi), d = ch - w;
            const cplx p = 0.5 + I * x[0];
            out.push_back(ch + a * a * p * d);
            out.push_back(w + a * a * p * d);
            out.push_back(I * a * cis(x[0]) * d);
            first_angle = l + 2;
            tail_scale = sh * cos(phi);
            break;
        }
    }
    const int N = n - first_angle;
    const auto c = sphere_components(x.data() + first_angle, N);
    std::vector<Pair> curves;
    for (int j = first_curve; j < l; ++j) curves.push_back(sphere_curve(s.a[j], x[j]));
    if (mp.reflected_third) {
        const double a = s.a[0], q = sqrt(1 + 4 * a * a);
        out.push_back(curves[0].first * sh);
        out.push_back(cis(x[0] / 2) * (cos(q * x[0] / 2) - 2 * a / q * sin(q * x[0] / 2)) * sh);
        return to_cvec(out);
    }
    append_twisted_sphere(out, curves, c, tail_scale);
    if (mp.drop_last) out.pop_back();
    return to_cvec(out);
}

// dtheta^2 + cosh^2(theta) a_h^2 dx_1^2 + sinh^2(theta)(sum a_j^2 c_j^2 dx_j^2 + round metric)
Eigen::MatrixXd warped_metric(const Shape& s, const ChartPoint& x) {
    const int n = s.n, l = s.l;
    const double th = x[l], ch = cosh(th), sh = sinh(th);
    std::vector<double> d(n, 0.0);
    const int first_curve = s.head == Head::none ? 0 : 1;
    if (first_curve == 1) d[0] = ch * ch * head_speed(s) * head_speed(s);
    d[l] = 1.0;
    const int N = n - l - 1;
    const auto c = sphere_components(x.data() + l + 1, N);
    const auto g = sphere_metric_diagonal(x.data() + l + 1, N);
    for (int j = first_curve; j < l; ++j) d[j] = sh * sh * s.a[j] * s.a[j] * c[j - first_curve] * c[j - first_curve];
    for (int r = 0; r < N; ++r) d[l + 1 + r] = sh * sh * g[r];
    return diag_metric(d);
}

// How a family reads its parameters.
enum class Layout { explicit_ab, general };

Shape shape_of(Head head, Layout layout, int fixed_n, int fixed_l, const ParamSet& p) {
    Shape s;
    s.head = head;
    if (layout == Layout::explicit_ab) {
        s.n = fixed_n;
        s.l = fixed_l;
        if (p.has("a")) s.a.push_back(p.get("a"));
        else s.a.push_back(0.5);  // parabolic head speed
        if (p.has("b")) s.a.push_back(p.get("b"));
    } else {
        s.n = p.integer("n");
        s.l = p.integer("l");
        for (int j = 1; j <= s.l; ++j) s.a.push_back(p.get(indexed("a", j)));
    }
    return s;
}

struct Spec {
    std::string item;  // "1" .. "21"
    Head head;
    Layout layout;
    int n = 0, l = 0;  // for explicit layouts
    std::string relation;  // for general layouts: "n>2l", "n=2l", "n=2l-1"
    int min_l = 1;
    int smoke_n = 0, smoke_l = 0;
    std::vector<std::pair<std::string, Misprint>> printed;  // printed variant, if it differs
};

bool relation_holds(const std::string& rel, int n, int l) {
    if (rel == "n>2l") return n > 2 * l;
    if (rel == "n=2l") return n == 2 * l;
    return n == 2 * l - 1;
}

std::string relation_text(const Spec& s) {
    if (s.relation == "n>2l") return "n > 2l >= " + std::to_string(2 * s.min_l);
    if (s.relation == "n=2l") return "n = 2l >= " + std::to_string(2 * s.min_l);
    return "n = 2l-1 >= " + std::to_string(2 * s.min_l - 1);
}

std::string head_title(Head h) {
    switch (h) {
        case Head::none: return "round";
        case Head::parabolic: return "parabolic";
        case Head::hyperbolic: return "hyperbolic";
        case Head::elliptic: return "elliptic";
        case Head::horospherical: return "horospherical";
    }
    return "";
}

Family build(const Spec& spec) {
    Family f;
    f.id = "chn.warped." + spec.item;
    f.label = "Theorem 4.3 (" + spec.item + ")";
    f.ambient = AmbientKind::hyperbolic;
    f.tier = Tier::B;
    const Head head = spec.head;
    const Layout layout = spec.layout;
    const int fn = spec.n, fl = spec.l;
    if (layout == Layout::explicit_ab) {
        f.title = "curvature -1 warped family in CH^" + std::to_string(fn) + " with " + head_title(head) + " head";
        f.dim = fixed_dim(fn);
        const bool has_a = head == Head::none || head == Head::hyperbolic || head == Head::elliptic;
        const bool has_b = fl == 2;
        if (has_a) {
            if (head == Head::hyperbolic) {
                f.params.push_back(real_param("a", "4a^2 > 1", 1.0, 0.6, 1.5));
                f.predicates.push_back(predicate("4a^2 > 1", [](const ParamSet& p) { return 4 * p.get("a") * p.get("a") > 1; }));
            } else if (head == Head::elliptic) {
                f.params.push_back(real_param("a", "0 < 4a^2 < 1", 0.3, 0.1, 0.45));
                f.predicates.push_back(predicate("0 < 4a^2 < 1", [](const ParamSet& p) {
                    return p.get("a") > 0 && 4 * p.get("a") * p.get("a") < 1;
                }));
            } else {
                f.params.push_back(real_param("a", "a > 0", 0.7, 0.3, 1.5));
                f.predicates.push_back(predicate("a > 0", [](const ParamSet& p) { return p.get("a") > 0; }));
            }
        }
        if (has_b) {
            f.params.push_back(real_param("b", "b > 0", 0.8, 0.3, 1.5));
            f.predicates.push_back(predicate("b > 0", [](const ParamSet& p) { return p.get("b") > 0; }));
        }
    } else {
        f.title = "curvature -1 warped family in CH^n with " + head_title(head) + " head, " + relation_text(spec);
        f.params = {int_param("n", relation_text(spec), spec.smoke_n), int_param("l", relation_text(spec), spec.smoke_l)};
        for (int j = 1; j <= 6; ++j) {
            const std::string name = indexed("a", j);
            if (j == 1 && head == Head::hyperbolic)
                f.params.push_back(real_param(name, "4a1^2 > 1", 1.0, 0.6, 1.5));
            else if (j == 1 && head == Head::elliptic)
                f.params.push_back(real_param(name, "0 < 4a1^2 < 1", 0.3, 0.1, 0.45));
            else
                f.params.push_back(real_param(name, name + " > 0", 0.5 + 0.2 * j, 0.3, 1.5));
        }
        const std::string rel = spec.relation;
        const int min_l = spec.min_l;
        f.predicates.push_back(predicate(relation_text(spec), [rel, min_l](const ParamSet& p) {
            const int n = p.integer("n"), l = p.integer("l");
            return l >= min_l && n <= 8 && relation_holds(rel, n, l);
        }));
        f.predicates.push_back(predicate("a_1, ..., a_l > 0", [](const ParamSet& p) {
            for (int j = 1; j <= p.integer("l"); ++j)
                if (!(p.get(indexed("a", j)) > 0)) return false;
            return true;
        }));
        if (head == Head::hyperbolic)
            f.predicates.push_back(predicate("4a_1^2 > 1", [](const ParamSet& p) { return 4 * p.get("a1") * p.get("a1") > 1; }));
        if (head == Head::elliptic)
            f.predicates.push_back(predicate("4a_1^2 < 1", [](const ParamSet& p) { return 4 * p.get("a1") * p.get("a1") < 1; }));
        f.dim = dim_from_n();
    }
    auto shape = [head, layout, fn, fl](const ParamSet& p) { return shape_of(head, layout, fn, fl, p); };
    f.domain = [shape, head](const ParamSet& p) {
        const Shape s = shape(p);
        std::vector<Interval> box(s.n, {-2.0, 2.0});
        box[s.l] = {0.3, 1.5};
        for (int r = s.l + 1; r < s.n; ++r) box[r] = {0.15, 1.4};
        Domain d = box_domain(box);
        const int l = s.l;
        d.positive("theta_" + std::to_string(l + 1) + " > 0", [l](const ChartPoint& x) { return x[l]; });
        add_angle_constraints(d, l + 1, s.n);
        (void)head;
        return d;
    };
    auto make = [shape](Misprint mp) {
        return [shape, mp](const ParamSet& p) -> MapFn {
            const Shape s = shape(p);
            return [s, mp](const ChartPoint& x) { return evaluate(s, mp, x); };
        };
    };
    for (const auto& [note, mp] : spec.printed) f.variants.push_back(variant("as-printed", note, make(mp)));
    f.variants.push_back(variant(spec.printed.empty() ? "as-printed" : "consistent", spec.printed.empty() ? "" :
                                 "head and sphere factors assembled consistently", make(Misprint{})));
    f.adapted = [shape](const ParamSet& p) {
        const int l = shape(p).l;
        std::vector<int> v(l);
        for (int j = 0; j < l; ++j) v[j] = j;
        return v;
    };
    if (head != Head::horospherical)
        f.metric = [shape](const ParamSet& p, const ChartPoint& x) { return warped_metric(shape(p), x); };
    f.nullity = [shape](const ParamSet& p) {
        const Shape s = shape(p);
        return NullitySpec{s.n - s.l, false};
    };
    return f;
}

Family horospherical_product() {
    Family f;
    f.id = "chn.warped.8";
    f.label = "Theorem 4.3 (8)";
    f.title = "curvature -1 warped family over the horospherical decomposition of H^n";
    f.ambient = AmbientKind::hyperbolic;
    f.tier = Tier::B;
    f.params = {int_param("n", "2 <= n <= 6", 3)};
    for (int j = 1; j <= 5; ++j) f.params.push_back(real_param(indexed("a", j), "a" + std::to_string(j) + " > 0", 0.5 + 0.25 * j, 0.3, 1.5));
    f.predicates = {predicate("2 <= n <= 6", [](const ParamSet& p) { return p.integer("n") >= 2 && p.integer("n") <= 6; }),
                    predicate("a_1, ..., a_{n-1} > 0", [](const ParamSet& p) {
                        for (int j = 1; j < p.integer("n"); ++j)
                            if (!(p.get(indexed("a", j)) > 0)) return false;
                        return true;
                    })};
    f.dim = dim_from_n();
    f.domain = [](const ParamSet& p) {
        std::vector<Interval> box(p.integer("n"), {-2.0, 2.0});
        box.back() = {-1.0, 1.0};
        return box_domain(box);
    };
    f.variants = {variant("as-printed", "", [](const ParamSet& p) -> MapFn {
        const int n = p.integer("n");
        std::vector<double> a(n - 1);
        double a2 = 0;
        for (int j = 0; j < n - 1; ++j) {
            a[j] = p.get(indexed("a", j + 1));
            a2 += a[j] * a[j];
        }
        const double A = sqrt(a2);
        return [=](const ChartPoint& x) {
            const double th = x[n - 1];
            double sum = 0;
            for (int j = 0; j < n - 1; ++j) sum += a[j] * a[j] * x[j];
            const cplx E = (exp(-th) + 2.0 * I * exp(th) * sum) / (2 * A);
            CVec v(n + 1);
            v[0] = A * exp(th) + E;
            for (int j = 0; j < n - 1; ++j) v[j + 1] = a[j] * cis(x[j]) * exp(th);
            v[n] = E;
            return v;
        };
    })};
    f.adapted = [](const ParamSet& p) {
        std::vector<int> v(p.integer("n") - 1);
        for (int j = 0; j < static_cast<int>(v.size()); ++j) v[j] = j;
        return v;
    };
    f.metric = [](const ParamSet& p, const ChartPoint& x) {
        const int n = p.integer("n");
        std::vector<double> d(n, 1.0);
        for (int j = 0; j < n - 1; ++j) d[j] = p.get(indexed("a", j + 1)) * p.get(indexed("a", j + 1)) * exp(2 * x[n - 1]);
        return diag_metric(d);
    };
    f.nullity = nullity_exact(1);
    return f;
}

}  // namespace

void add_hyperbolic_warped_families(std::vector<Family>& out) {
    Misprint third;
    third.reflected_third = true;
    Misprint sine_head;
    sine_head.sine_first_head = true;
    Misprint wrong_speed;
    wrong_speed.second_speed_in_head = true;
    Misprint hyp_elliptic;
    hyp_elliptic.hyperbolic_elliptic = true;
    Misprint dropped;
    dropped.drop_last = true;
    Misprint wrong_speed_dropped = wrong_speed;
    wrong_speed_dropped.drop_last = true;
    Misprint hyp_elliptic_dropped = hyp_elliptic;
    hyp_elliptic_dropped.drop_last = true;

    const std::vector<Spec> specs = {
        {"1", Head::none, Layout::explicit_ab, 2, 1, "", 1, 0, 0,
         {{"third entry e^{ix/2}(cos(sx/2) - 2a sin(sx/2)/s) sinh(theta)", third}}},
        {"2", Head::parabolic, Layout::explicit_ab, 2, 1, "", 1, 0, 0, {}},
        {"3", Head::elliptic, Layout::explicit_ab, 2, 1, "", 1, 0, 0, {}},
        {"4", Head::hyperbolic, Layout::explicit_ab, 2, 1, "", 1, 0, 0, {}},
        {"5", Head::parabolic, Layout::explicit_ab, 3, 2, "", 1, 0, 0, {}},
        {"6", Head::hyperbolic, Layout::explicit_ab, 3, 2, "", 1, 0, 0,
         {{"head (e^{ix/2} cosh(tx/2) sin(theta), e^{ix/2} sinh(tx/2) cosh(theta))", sine_head}}},
        {"7", Head::elliptic, Layout::explicit_ab, 3, 2, "", 1, 0, 0, {}},
        {"9", Head::none, Layout::general, 0, 0, "n>2l", 1, 5, 2, {}},
        {"10", Head::parabolic, Layout::general, 0, 0, "n>2l", 1, 5, 2, {}},
        {"11", Head::hyperbolic, Layout::general, 0, 0, "n>2l", 1, 5, 2, {{"second head entry scaled by a_2", wrong_speed}}},
        {"12", Head::elliptic, Layout::general, 0, 0, "n>2l", 1, 5, 2,
         {{"elliptic head written with cosh/sinh of sqrt(1-4a_1^2)", hyp_elliptic}}},
        {"13", Head::horospherical, Layout::general, 0, 0, "n>2l", 3, 7, 3, {}},
        {"14", Head::none, Layout::general, 0, 0, "n=2l", 2, 4, 2, {}},
        {"15", Head::parabolic, Layout::general, 0, 0, "n=2l", 2, 4, 2, {{"final bare sphere component missing", dropped}}},
        {"16", Head::hyperbolic, Layout::general, 0, 0, "n=2l", 2, 4, 2,
         {{"second head entry scaled by a_2; final bare sphere component missing", wrong_speed_dropped}}},
        {"17", Head::elliptic, Layout::general, 0, 0, "n=2l", 2, 4, 2,
         {{"elliptic head written with cosh/sinh; final bare sphere component missing", hyp_elliptic_dropped}}},
        {"18", Head::horospherical, Layout::general, 0, 0, "n=2l", 3, 6, 3, {}},
        {"19", Head::parabolic, Layout::general, 0, 0, "n=2l-1", 3, 5, 3, {}},
        {"20", Head::hyperbolic, Layout::general, 0, 0, "n=2l-1", 3, 5, 3, {}},
        {"21", Head::elliptic, Layout::general, 0, 0, "n=2l-1", 3, 5, 3, {}},
    };
    for (const auto& s : specs) out.push_back(build(s));
    out.push_back(horospherical_product());
}

}  // namespace hsl::fam
