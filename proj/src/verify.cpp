#include "hslab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hslab/diffgeo.hpp"
#include "hslab/errors.hpp"
#include "hslab/twistor.hpp"

namespace hsl {

using json = nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_double(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    return a == b;
}

// Running max / rms of one check over a point set; evaluation failures make the check fail.
struct Accumulator {
    double max = 0.0;
    double sumsq = 0.0;
    int count = 0;
    int failures = 0;
    std::string first_failure;

    void add(double r) {
        if (!std::isfinite(r)) r = kInf;
        max = std::max(max, r);
        sumsq += r * r;
        ++count;
    }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
        max = kInf;
    }
};

class CheckSet {
public:
    explicit CheckSet(const Tolerances& tol) : tol_(tol) {}

    Accumulator& operator[](const std::string& name) {
        for (auto& [n, a] : entries_)
            if (n == name) return a;
        entries_.emplace_back(name, Accumulator{});
        return entries_.back().second;
    }
    void fail_all(const std::vector<std::string>& names, const std::string& what) {
        for (const auto& n : names) (*this)[n].fail(what);
    }

    std::vector<Check> finish(const std::set<std::string>& expected_fail) const {
        std::vector<Check> out;
        for (const auto& [name, a] : entries_) {
            Check c;
            c.name = name;
            c.max_residual = a.max;
            c.rms_residual = a.failures ? kInf : (a.count ? std::sqrt(a.sumsq / a.count) : 0.0);
            c.tolerance = tol_.get(name);
            c.pass = c.max_residual <= c.tolerance;
            c.expected_fail = expected_fail.count(name) != 0;
            if (a.failures)
                c.note = "evaluation failed at " + std::to_string(a.failures) + " point(s): " + a.first_failure;
            else if (c.expected_fail)
                c.note = c.pass ? "expected to fail but passed" : "fails by design";
            out.push_back(c);
        }
        return out;
    }

private:
    const Tolerances& tol_;
    std::vector<std::pair<std::string, Accumulator>> entries_;
};

Jet2 rotated(const Jet2& jet, double phase) {
    const cplx u = std::polar(1.0, phase);
    Jet2 out = jet;
    out.value *= u;
    for (auto& v : out.grad) v *= u;
    for (int j = 0; j < jet.n; ++j)
        for (int k = j; k < jet.n; ++k) out.hess(j, k) *= u;
    return out;
}

// Largest change in g, |h|, JH and the cubic form, relative to the size of the data.
double geometry_difference(const GeometryAtPoint& a, const GeometryAtPoint& b) {
    double r = (a.g - b.g).cwiseAbs().maxCoeff();
    double scale = a.g.cwiseAbs().maxCoeff();
    r = std::max(r, std::abs(h_norm(a) - h_norm(b)));
    scale = std::max(scale, h_norm(a));
    r = std::max(r, (a.jh_tangent - b.jh_tangent).cwiseAbs().maxCoeff());
    scale = std::max(scale, a.jh_tangent.cwiseAbs().maxCoeff());
    for (size_t i = 0; i < a.cubic.size(); ++i) {
        r = std::max(r, std::abs(a.cubic[i] - b.cubic[i]));
        scale = std::max(scale, std::abs(a.cubic[i]));
    }
    return r / std::max(1.0, scale);
}

std::vector<std::string> failing_checks(const CheckReport& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks)
        if (!c.expected_fail && !c.pass) out.push_back(c.name);
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

// One family, one parameter set, one variant; no variant promotion.
CheckReport verify_variant(const Family& family, const ParamSet& params, const std::string& variant,
                           const RunConfig& config, const Tolerances& tol) {
    CheckReport rep;
    rep.family = family.id;
    rep.paper_tag = family.label;
    rep.tier = to_string(family.tier);
    rep.variant = variant;
    rep.params = params;
    rep.grid = config.grid;

    Immersion imm;
    std::vector<ChartPoint> pts;
    try {
        imm = instantiate(family, params, variant);
        rep.variant = imm.variant;
        rep.params = imm.params;
        GridSpec gs;
        gs.count = config.grid.count;
        gs.seed = config.grid.seed;
        gs.margin = config.grid.margin;
        pts = sample_domain(imm, gs);
    } catch (const std::exception& e) {
        rep.error = e.what();
        return rep;
    }

    const AmbientModel& model = imm.ambient;
    const int n = imm.dim();
    CheckSet checks(tol);
    std::vector<std::string> pointwise;
    auto declare = [&](const std::string& name) {
        checks[name];
        pointwise.push_back(name);
    };

    if (model.is_lift()) {
        declare("quadric");
        declare("contact");
    }
    declare("isotropy");
    if (family.metric) declare("metric");
    std::vector<int> adapted;
    if (family.adapted) {
        adapted = family.adapted(imm.params);
        if (!adapted.empty()) declare("pattern");
    }
    declare("normality");
    declare("cubic-symmetry");
    declare("normal-connection");
    std::optional<NullitySpec> nullity;
    if (family.nullity) {
        nullity = family.nullity(imm.params);
        declare("nullity");
        if (!nullity->at_least && nullity->value == n) declare("h-norm");
    }

    std::optional<TwistorSolution> sol;
    if (family.twistor) {
        declare("twistor-metric");
        declare("twistor-equations");
        try {
            sol = make_solution(family.twistor->solution_id, family.twistor->params(imm.params));
        } catch (const std::exception& e) {
            checks.fail_all({"twistor-metric", "twistor-equations"}, e.what());
        }
    }
    if (family.lift_system != LiftSystem::none) declare("lift-system");

    std::vector<std::string> nested_names;
    if (model.is_lift()) nested_names.push_back("phase-invariance");
    for (const char* s : {"curvature", "gauss-equation", "div-jh", "codazzi"}) nested_names.push_back(s);
    for (const auto& s : nested_names) checks[s];

    const int nested = std::min<int>(config.grid.nested, static_cast<int>(pts.size()));
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const ChartPoint& p = pts[i];
        GeometryAtPoint geom;
        try {
            geom = geometry_at(imm, p);
        } catch (const std::exception& e) {
            checks.fail_all(pointwise, e.what());
            if (i < nested) checks.fail_all(nested_names, e.what());
            continue;
        }
        const Jet2& jet = geom.jet;
        if (model.is_lift()) {
            checks["quadric"].add(quadric_residual(jet.value, model));
            checks["contact"].add(contact_residual(jet.value, jet.grad, model));
        }
        checks["isotropy"].add(isotropy_residual(jet.grad, model));
        if (family.metric) checks["metric"].add(metric_deviation(geom, family.metric(imm.params, p)));
        if (!adapted.empty()) checks["pattern"].add(pattern_residual(geom, adapted));
        checks["normality"].add(normality_residual(geom, model));
        checks["cubic-symmetry"].add(cubic_symmetry_residual(geom));
        checks["normal-connection"].add(normal_connection_residual(geom, model));
        if (nullity) {
            const int k = relative_nullity(geom);
            checks["nullity"].add(nullity->at_least ? std::max(0, nullity->value - k) : std::abs(k - nullity->value));
            if (!nullity->at_least && nullity->value == n) checks["h-norm"].add(h_norm(geom));
        }
        if (sol) {
            try {
                const auto F = sol->eval(p);
                Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
                for (int a = 0; a < static_cast<int>(F.size()) && a < n; ++a) d(a, a) = F[a].v * F[a].v;
                checks["twistor-metric"].add((geom.g - d).cwiseAbs().maxCoeff());
                double r = 0;
                for (const auto& eq : sol->equations) r = std::max(r, std::abs(equation_residual(*sol, eq, p)));
                checks["twistor-equations"].add(r);
            } catch (const std::exception& e) {
                checks.fail_all({"twistor-metric", "twistor-equations"}, e.what());
            }
        }
        if (family.lift_system != LiftSystem::none) {
            try {
                checks["lift-system"].add(lift_system_residual(family.lift_system, jet, p, imm.params));
            } catch (const std::exception& e) {
                checks["lift-system"].fail(e.what());
            }
        }
        if (i >= nested) continue;

        if (model.is_lift()) {
            try {
                checks["phase-invariance"].add(geometry_difference(geom, second_fundamental_form(rotated(jet, 0.7), model)));
            } catch (const std::exception& e) {
                checks["phase-invariance"].fail(e.what());
            }
        }
        try {
            const CurvatureResidual k = sectional_curvature_residual(imm, p);
            checks["curvature"].add(k.intrinsic);
            checks["gauss-equation"].add(k.gauss);
        } catch (const std::exception& e) {
            checks.fail_all({"curvature", "gauss-equation"}, e.what());
        }
        try {
            checks["div-jh"].add(std::abs(div_jh(imm, p)));
        } catch (const std::exception& e) {
            checks["div-jh"].fail(e.what());
        }
        try {
            checks["codazzi"].add(codazzi_residual(imm, p));
        } catch (const std::exception& e) {
            checks["codazzi"].fail(e.what());
        }
    }

    std::set<std::string> expected;
    if (family.tier == Tier::Control) expected.insert("div-jh");
    rep.checks = checks.finish(expected);
    return rep;
}

std::string discrepancy_note(const Family& family, const CheckReport& rep) {
    std::string s = rep.error.empty() ? "failing checks: " + join(failing_checks(rep), ", ") : "error: " + rep.error;
    s += "; suspected: ";
    s += family.known_issue.empty()
             ? "transcription of the printed closed form or an unstated parameter restriction"
             : family.known_issue;
    return s;
}

void add_param_set(std::vector<ParamSet>& sets, const ParamSet& p) {
    if (std::find(sets.begin(), sets.end(), p) == sets.end()) sets.push_back(p);
}

template <class F>
void parallel_for(int count, int workers, F&& body) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

json double_to_json(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ConfigError("not a number: '" + s + "'");
}

json report_to_json(const CheckReport& r, bool with_timestamp) {
    json params = json::object();
    for (const auto& [k, v] : r.params.values()) params[k] = double_to_json(v);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"max_residual", double_to_json(c.max_residual)},
                          {"rms_residual", double_to_json(c.rms_residual)},
                          {"tolerance", double_to_json(c.tolerance)},
                          {"pass", c.pass},
                          {"expected_fail", c.expected_fail},
                          {"note", c.note}});
    json j = {{"family", r.family},
              {"paper_tag", r.paper_tag},
              {"tier", r.tier},
              {"variant", r.variant},
              {"rejected_variants", r.rejected_variants},
              {"params", params},
              {"grid", {{"seed", r.grid.seed}, {"count", r.grid.count}, {"nested", r.grid.nested}, {"margin", r.grid.margin}}},
              {"checks", checks},
              {"discrepancy", r.discrepancy},
              {"error", r.error},
              {"tool_version", r.tool_version}};
    if (with_timestamp) j["timestamp"] = r.timestamp;
    return j;
}

CheckReport report_from_json(const json& j) {
    CheckReport r;
    r.family = j.at("family").get<std::string>();
    r.paper_tag = j.value("paper_tag", "");
    r.tier = j.at("tier").get<std::string>();
    r.variant = j.value("variant", "");
    r.rejected_variants = j.value("rejected_variants", std::vector<std::string>{});
    for (const auto& [k, v] : j.at("params").items()) r.params.set(k, double_from_json(v));
    const json& g = j.at("grid");
    r.grid.seed = g.at("seed").get<std::uint64_t>();
    r.grid.count = g.at("count").get<int>();
    r.grid.nested = g.value("nested", r.grid.nested);
    r.grid.margin = g.at("margin").get<double>();
    for (const auto& c : j.at("checks")) {
        Check k;
        k.name = c.at("name").get<std::string>();
        k.max_residual = double_from_json(c.at("max_residual"));
        k.rms_residual = double_from_json(c.at("rms_residual"));
        k.tolerance = double_from_json(c.at("tolerance"));
        k.pass = c.at("pass").get<bool>();
        k.expected_fail = c.value("expected_fail", false);
        k.note = c.value("note", "");
        r.checks.push_back(k);
    }
    r.discrepancy = j.value("discrepancy", "");
    r.error = j.value("error", "");
    r.timestamp = j.value("timestamp", "");
    r.tool_version = j.value("tool_version", "");
    return r;
}

const std::set<std::string>& known_checks() {
    static const std::set<std::string> s = {
        "quadric",   "contact",        "isotropy",        "metric",          "pattern",           "normality",
        "cubic-symmetry", "normal-connection", "nullity", "h-norm",         "twistor-metric",    "twistor-equations",
        "lift-system", "phase-invariance", "curvature",   "gauss-equation",  "div-jh",            "codazzi",
        "equations", "hstationary",    "partials-fd",     "lemma61",         "lemma62"};
    return s;
}

}  // namespace

bool Check::operator==(const Check& o) const {
    return name == o.name && same_double(max_residual, o.max_residual) && same_double(rms_residual, o.rms_residual) &&
           same_double(tolerance, o.tolerance) && pass == o.pass && expected_fail == o.expected_fail && note == o.note;
}

bool CheckReport::passed() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
        if (c.expected_fail ? c.pass : !c.pass) return false;
    return true;
}

bool CheckReport::required_failure() const {
    if (passed()) return false;
    if (tier == "B") return discrepancy.empty();
    return true;
}

const Check* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool CheckReport::operator==(const CheckReport& o) const {
    if (params.values().size() != o.params.values().size()) return false;
    for (const auto& [k, v] : params.values())
        if (!o.params.has(k) || !same_double(v, o.params.get(k))) return false;
    return family == o.family && paper_tag == o.paper_tag && tier == o.tier && variant == o.variant &&
           rejected_variants == o.rejected_variants && grid == o.grid && checks == o.checks &&
           discrepancy == o.discrepancy && error == o.error && timestamp == o.timestamp && tool_version == o.tool_version;
}

Tolerances Tolerances::profile(const std::string& name) {
    Tolerances t;
    const double exact = 1e-10, analytic = 1e-8, fd = 1e-6, nested = 1e-3;
    t.values = {{"quadric", exact},          {"contact", fd},           {"isotropy", fd},
                {"metric", fd},              {"pattern", 1e-5},         {"normality", fd},
                {"cubic-symmetry", fd},      {"normal-connection", 1e-5}, {"nullity", 0.0},
                {"h-norm", exact},           {"twistor-metric", fd},    {"twistor-equations", analytic},
                {"lift-system", 1e-5},       {"phase-invariance", exact}, {"curvature", nested},
                {"gauss-equation", nested},  {"div-jh", nested},        {"codazzi", nested},
                {"equations", analytic},     {"hstationary", 1e-12},    {"partials-fd", analytic},
                {"lemma61", 1e-9},           {"lemma62", 1e-9}};
    if (name == "default") return t;
    if (name == "loose") {
        for (auto& [k, v] : t.values)
            if (k != "nullity") v *= 10;
        return t;
    }
    throw ConfigError("unknown tolerance profile '" + name + "' (expected default or loose)");
}

double Tolerances::get(const std::string& check) const {
    auto it = values.find(check);
    if (it != values.end()) return it->second;
    // twistor suite names carry a suffix, e.g. "equations 6.1" or "lemma61 6.2"
    const auto space = check.find(' ');
    if (space != std::string::npos) {
        it = values.find(check.substr(0, space));
        if (it != values.end()) return it->second;
    }
    throw ConfigError("no tolerance for check '" + check + "'");
}

void RunConfig::validate() const {
    for (const auto& id : families) find_family(id);
    for (const auto& [id, p] : params) {
        const Family& f = find_family(id);
        for (const auto& [k, v] : p.values()) {
            (void)v;
            const bool known = std::any_of(f.params.begin(), f.params.end(), [&](const ParamSpec& s) { return s.name == k; });
            if (!known) throw ConfigError(id + ": unknown parameter '" + k + "'");
        }
        try {
            f.check_admissible(f.complete(p));
        } catch (const AdmissibilityError& e) {
            throw ConfigError(std::string("inadmissible parameters: ") + e.what());
        }
    }
    for (const auto& [id, v] : variants) find_family(id).variant(v);
    Tolerances::profile(tolerance_profile);
    for (const auto& [k, v] : tolerance_overrides) {
        if (!known_checks().count(k)) throw ConfigError("unknown check '" + k + "' in tolerance overrides");
        if (!(v >= 0)) throw ConfigError("tolerance for '" + k + "' must be non-negative");
    }
    if (grid.count < 1) throw ConfigError("grid count must be positive");
    if (grid.nested < 0 || grid.nested > grid.count) throw ConfigError("nested grid must lie within the grid");
    if (!(grid.margin >= 0)) throw ConfigError("grid margin must be non-negative");
    if (draws < 0) throw ConfigError("draws must be non-negative");
    if (workers < 0) throw ConfigError("workers must be non-negative");
}

RunConfig run_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> keys = {"families", "params", "variants", "tier", "tol_profile", "tolerances",
                                               "grid", "draws", "promote_variants", "output", "workers", "single_thread"};
    RunConfig c;
    try {
        for (const auto& [k, v] : j.items()) {
            (void)v;
            if (!keys.count(k)) throw ConfigError("unknown config key '" + k + "'");
        }
        c.families = j.value("families", std::vector<std::string>{});
        if (j.contains("params"))
            for (const auto& [id, ps] : j["params"].items())
                for (const auto& [k, v] : ps.items()) c.params[id].set(k, v.get<double>());
        if (j.contains("variants"))
            for (const auto& [id, v] : j["variants"].items()) c.variants[id] = v.get<std::string>();
        if (j.contains("tier")) c.tier = tier_from_string(j["tier"].get<std::string>());
        c.tolerance_profile = j.value("tol_profile", c.tolerance_profile);
        if (j.contains("tolerances"))
            for (const auto& [k, v] : j["tolerances"].items()) c.tolerance_overrides[k] = v.get<double>();
        if (j.contains("grid")) {
            const json& g = j["grid"];
            c.grid.count = g.value("count", c.grid.count);
            c.grid.seed = g.value("seed", c.grid.seed);
            c.grid.nested = g.value("nested", std::min(c.grid.nested, c.grid.count));
            c.grid.margin = g.value("margin", c.grid.margin);
        }
        c.draws = j.value("draws", c.draws);
        c.promote_variants = j.value("promote_variants", c.promote_variants);
        c.output = j.value("output", c.output);
        c.workers = j.value("workers", c.workers);
        c.single_thread = j.value("single_thread", c.single_thread);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    c.validate();
    return c;
}

CheckReport verify_family(const Family& family, const ParamSet& params, const RunConfig& config) {
    Tolerances tol = Tolerances::profile(config.tolerance_profile);
    for (const auto& [k, v] : config.tolerance_overrides) tol.values[k] = v;

    CheckReport rep;
    auto forced = config.variants.find(family.id);
    if (forced != config.variants.end()) {
        rep = verify_variant(family, params, forced->second, config, tol);
    } else {
        rep = verify_variant(family, params, family.variants.front().name, config, tol);
        if (!rep.passed() && config.promote_variants && family.variants.size() > 1) {
            std::vector<std::string> rejected;
            auto describe = [](const CheckReport& r) {
                return r.variant + " fails " + (r.error.empty() ? join(failing_checks(r), ", ") : r.error);
            };
            rejected.push_back(describe(rep));
            std::optional<CheckReport> winner;
            for (size_t v = 1; v < family.variants.size(); ++v) {
                CheckReport trial = verify_variant(family, params, family.variants[v].name, config, tol);
                if (trial.passed()) {
                    winner = std::move(trial);
                    break;
                }
                rejected.push_back(describe(trial));
            }
            if (winner) {
                rep = std::move(*winner);
                rep.rejected_variants = std::move(rejected);
            } else {
                rep.rejected_variants.assign(rejected.begin() + 1, rejected.end());
            }
        }
    }
    if (!rep.passed() && family.tier != Tier::Control) rep.discrepancy = discrepancy_note(family, rep);
    rep.timestamp = utc_timestamp();
    return rep;
}

int worker_count(const RunConfig& config) {
    if (config.single_thread) return 1;
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("HSLAB_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
        throw ConfigError(std::string("HSLAB_WORKERS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckReport> run_verification(const RunConfig& config) {
    config.validate();
    std::vector<const Family*> families;
    if (config.families.empty()) {
        for (const auto& f : registry())
            if (!config.tier || f.tier == *config.tier) families.push_back(&f);
    } else {
        for (const auto& id : config.families) families.push_back(&find_family(id));
    }

    struct Task {
        const Family* family;
        ParamSet params;
        std::string error;
    };
    std::vector<Task> tasks;
    for (const Family* f : families) {
        std::vector<ParamSet> sets;
        auto given = config.params.find(f->id);
        add_param_set(sets, given == config.params.end() ? f->smoke_params() : f->complete(given->second));
        if (f->tier == Tier::A && given == config.params.end()) {
            for (int d = 0; d < config.draws; ++d) {
                try {
                    add_param_set(sets, draw_params(*f, config.grid.seed * 1000 + d + 1));
                } catch (const std::exception& e) {
                    tasks.push_back({f, f->smoke_params(), e.what()});
                }
            }
        }
        for (auto& p : sets) tasks.push_back({f, std::move(p), ""});
    }

    std::vector<CheckReport> out(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), worker_count(config), [&](int i) {
        const Task& t = tasks[i];
        if (!t.error.empty()) {
            CheckReport r;
            r.family = t.family->id;
            r.paper_tag = t.family->label;
            r.tier = to_string(t.family->tier);
            r.params = t.params;
            r.grid = config.grid;
            r.error = t.error;
            if (t.family->tier == Tier::B) r.discrepancy = discrepancy_note(*t.family, r);
            r.timestamp = utc_timestamp();
            out[i] = std::move(r);
            return;
        }
        out[i] = verify_family(*t.family, t.params, config);
    });
    return out;
}

std::vector<CheckReport> run_twistor_suite(int count, std::uint64_t seed, const std::string& only, const ParamSet& params) {
    if (count < 1) throw ConfigError("grid count must be positive");
    const Tolerances tol = Tolerances::profile("default");
    std::vector<CheckReport> out;
    for (const auto& info : solution_registry()) {
        if (!only.empty() && info.id != only) continue;
        CheckReport rep;
        rep.family = "twistor/" + info.id;
        rep.paper_tag = info.label;
        rep.tier = "A";
        rep.variant = "as-printed";
        rep.grid = GridMeta{seed, count, std::min(count, 100), 0.0};
        CheckSet checks(tol);
        try {
            const TwistorSolution sol = make_solution(info.id, only.empty() ? ParamSet{} : params);
            rep.params = sol.params;
            const auto grid = solution_grid(sol, count, seed);
            const auto res = full_system_residual(sol, grid, sol.equations);
            for (const auto& e : res.equations) {
                auto& a = checks[(e.equation == "3.8" ? "hstationary " : "equations ") + e.equation];
                a.max = e.max;
                a.sumsq = e.rms * e.rms * res.points;
                a.count = res.points;
            }
            // difference quotients need room around the singular loci
            GridSpec away;
            away.count = rep.grid.nested;
            away.seed = seed;
            away.margin = 0.05;
            auto& fd = checks["partials-fd"];
            for (const auto& p : sample_domain(sol.domain, away)) fd.add(partials_fd_deviation(sol, p));

            if (sol.l == 2 && sol.dim == 2) {
                const TwistorSolution t = scale_transform(sol, 1.7, 0.6, ScaleMode::lemma61);
                away.count = count / 5 + 1;
                away.seed = seed + 1;
                const auto tg = sample_domain(t.domain, away);
                for (const auto& e : full_system_residual(t, tg, t.equations).equations) {
                    auto& a = checks["lemma61 " + e.equation];
                    a.add(e.max);
                }
                if (sol.traveling_wave)
                    for (int sign : {1, -1}) {
                        const TwistorSolution w = scale_transform(sol, 1.7, 1.0, ScaleMode::lemma62, sign);
                        away.seed = seed + 2;
                        const auto wg = sample_domain(w.domain, away);
                        for (const auto& e : full_system_residual(w, wg, {"6.1", "6.2"}).equations)
                            checks["lemma62 " + e.equation].add(e.max);
                    }
            }
        } catch (const std::exception& e) {
            rep.error = e.what();
        }
        rep.checks = checks.finish({});
        if (!rep.passed()) rep.discrepancy = "failing checks: " + join(failing_checks(rep), ", ");
        rep.timestamp = utc_timestamp();
        out.push_back(std::move(rep));
    }
    if (!only.empty() && out.empty()) throw NotFoundError("unknown twistor solution '" + only + "'");
    return out;
}

std::string emit_json(const std::vector<CheckReport>& reports, bool with_timestamp) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r, with_timestamp));
    return j.dump(2) + "\n";
}

std::vector<CheckReport> parse_reports(const std::string& text) {
    std::vector<CheckReport> out;
    try {
        const json j = json::parse(text);
        if (!j.is_array()) throw ConfigError("report document must be a JSON array");
        for (const auto& r : j) out.push_back(report_from_json(r));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed report document: ") + e.what());
    }
    return out;
}

std::string emit_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    auto num = [](double v) {
        std::ostringstream s;
        s << std::scientific << std::setprecision(2) << v;
        return s.str();
    };
    os << std::left << std::setw(28) << "family" << std::setw(16) << "variant" << std::setw(22) << "check" << std::right
       << std::setw(11) << "max" << std::setw(11) << "rms" << std::setw(11) << "tol" << "  status\n";
    for (const auto& r : reports) {
        if (!r.error.empty())
            os << std::left << std::setw(28) << r.family << std::setw(16) << r.variant << std::setw(22) << "-" << std::right
               << std::setw(11) << "-" << std::setw(11) << "-" << std::setw(11) << "-" << "  ERROR " << r.error << "\n";
        for (const auto& c : r.checks) {
            const char* status = c.expected_fail ? (c.pass ? "UNEXPECTED-PASS" : "XFAIL") : (c.pass ? "ok" : "FAIL");
            os << std::left << std::setw(28) << r.family << std::setw(16) << r.variant << std::setw(22) << c.name << std::right
               << std::setw(11) << num(c.max_residual) << std::setw(11) << num(c.rms_residual) << std::setw(11)
               << num(c.tolerance) << "  " << status << "\n";
        }
        for (const auto& v : r.rejected_variants) os << "  rejected " << r.family << ": " << v << "\n";
        if (!r.discrepancy.empty()) os << "  note " << r.family << ": " << r.discrepancy << "\n";
    }
    return os.str();
}

int exit_status(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.required_failure()) return 1;
    return 0;
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace hsl
