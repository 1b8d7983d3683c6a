#include "hslab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"

#include "family_util.hpp"
#include "hslab/errors.hpp"

namespace hsl {

std::string to_string(Tier t) {
    switch (t) {
        case Tier::A: return "A";
        case Tier::B: return "B";
        case Tier::Control: return "control";
    }
    return "?";
}

Tier tier_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Tier::A;
    if (s == "B" || s == "b") return Tier::B;
    if (s == "control") return Tier::Control;
    throw ConfigError("unknown tier '" + s + "'");
}

int Family::epsilon() const {
    switch (ambient) {
        case AmbientKind::flat: return 0;
        case AmbientKind::spherical: return 1;
        case AmbientKind::hyperbolic: return -1;
    }
    return 0;
}

ParamSet Family::smoke_params() const {
    ParamSet p;
    for (const auto& s : params) p.set(s.name, s.smoke);
    return p;
}

ParamSet Family::complete(const ParamSet& given) const {
    ParamSet base = smoke_params();
    ParamSet out = base.merged(given);
    for (const auto& [k, v] : given.values()) {
        bool known = false;
        for (const auto& s : params) known = known || s.name == k;
        if (!known)
            throw ConfigError("family '" + id + "' has no parameter '" + k + "'");
    }
    return out;
}

void Family::check_admissible(const ParamSet& p) const {
    for (const auto& s : params) {
        if (!p.has(s.name)) throw AdmissibilityError(id + ": missing parameter '" + s.name + "'");
        const double v = p.get(s.name);
        if (!std::isfinite(v)) throw AdmissibilityError(id + ": parameter '" + s.name + "' is not finite");
        if (s.integer) (void)p.integer(s.name);
    }
    for (const auto& pr : predicates)
        if (!pr.holds(p)) throw AdmissibilityError(id + ": violated constraint " + pr.text + " (" + p.str() + ")");
}

const Variant& Family::variant(const std::string& name) const {
    if (name.empty()) return variants.front();
    for (const auto& v : variants)
        if (v.name == name) return v;
    throw NotFoundError("family '" + id + "' has no variant '" + name + "'");
}

std::string Immersion::id() const { return family ? family->id : std::string("composed"); }

const std::vector<Family>& registry() {
    static const std::vector<Family> reg = [] {
        std::vector<Family> out;
        fam::add_flat_families(out);
        fam::add_projective_families(out);
        fam::add_hyperbolic_surface_families(out);
        fam::add_hyperbolic_warped_families(out);
        fam::add_nullity_families(out);
        fam::add_control_families(out);
        std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) { return a.id < b.id; });
        return out;
    }();
    return reg;
}

const Family& find_family(const std::string& id) {
    for (const auto& f : registry())
        if (f.id == id) return f;
    throw NotFoundError("no family with id '" + id + "'");
}

std::vector<FamilySummary> list_families(const FamilyFilter& filter) {
    std::vector<FamilySummary> out;
    for (const auto& f : registry()) {
        if (filter.ambient && f.ambient != *filter.ambient) continue;
        if (filter.tier && f.tier != *filter.tier) continue;
        const int n = f.dim(f.smoke_params());
        if (filter.dim && n != *filter.dim) continue;
        out.push_back({f.id, f.label, f.title, to_string(f.ambient), f.tier, n, static_cast<int>(f.variants.size())});
    }
    return out;
}

Immersion instantiate(const Family& family, const ParamSet& params, const std::string& variant_name) {
    ParamSet p = family.complete(params);
    family.check_admissible(p);
    const Variant& v = family.variant(variant_name);
    Immersion imm;
    imm.family = &family;
    imm.variant = v.name;
    imm.params = p;
    const int n = family.dim(p);
    imm.ambient = AmbientModel::of_kind(family.ambient, n);
    imm.par.dim = n;
    imm.par.ambient_dim = imm.ambient.m;
    imm.par.map = v.make_map(p);
    if (v.make_jet) imm.par.analytic = v.make_jet(p);
    imm.par.domain = family.domain(p);
    if (imm.par.domain.dim() != n)
        throw DimensionError(family.id + ": domain has " + std::to_string(imm.par.domain.dim()) + " coordinates, expected " +
                             std::to_string(n));
    return imm;
}

Immersion instantiate(const std::string& id, const ParamSet& params, const std::string& variant) {
    return instantiate(find_family(id), params, variant);
}

namespace {
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace

std::vector<ChartPoint> sample_domain(const Domain& domain, const GridSpec& grid) {
    if (grid.count < 0) throw SamplingError("negative sample count");
    const int n = domain.dim();
    std::vector<ChartPoint> pts;
    if (grid.count == 0) return pts;
    pts.reserve(grid.count);
    if (grid.mode == SamplingMode::random) {
        std::mt19937_64 rng(grid.seed);
        const long budget = 2000L * grid.count + 10000;
        long tries = 0;
        while (static_cast<int>(pts.size()) < grid.count) {
            if (++tries > budget)
                throw SamplingError("could not find " + std::to_string(grid.count) + " admissible points (found " +
                                    std::to_string(pts.size()) + ")");
            ChartPoint p(n);
            for (int j = 0; j < n; ++j) p[j] = domain.box[j].lo + (domain.box[j].hi - domain.box[j].lo) * unit_draw(rng);
            if (domain.admits(p, grid.margin)) pts.push_back(std::move(p));
        }
    } else {
        int per_axis = 1;
        while (std::pow(per_axis, n) < grid.count) ++per_axis;
        std::vector<int> idx(n, 0);
        while (true) {
            ChartPoint p(n);
            for (int j = 0; j < n; ++j)
                p[j] = domain.box[j].lo + (domain.box[j].hi - domain.box[j].lo) * (idx[j] + 0.5) / per_axis;
            if (domain.admits(p, grid.margin)) pts.push_back(std::move(p));
            if (static_cast<int>(pts.size()) == grid.count) break;
            int j = 0;
            while (j < n && ++idx[j] == per_axis) idx[j++] = 0;
            if (j == n) break;
        }
        if (pts.empty()) throw SamplingError("no admissible lattice point");
    }
    return pts;
}

std::vector<ChartPoint> sample_domain(const Immersion& handle, const GridSpec& grid) {
    return sample_domain(handle.par.domain, grid);
}

ParamSet draw_params(const Family& family, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    for (int attempt = 0; attempt < 200; ++attempt) {
        ParamSet p = family.smoke_params();
        for (const auto& s : family.params)
            if (!s.integer && s.draw_hi > s.draw_lo) p.set(s.name, s.draw_lo + (s.draw_hi - s.draw_lo) * unit_draw(rng));
        bool ok = true;
        for (const auto& pr : family.predicates) ok = ok && pr.holds(p);
        if (ok) return p;
    }
    throw SamplingError(family.id + ": no admissible parameter draw");
}

Immersion compose_with_inner(const std::string& outer_id, const Immersion& inner) {
    const Family& outer = find_family(outer_id);
    if (!outer.composition) throw CompositionError("'" + outer_id + "' is not a composition family");
    if (inner.ambient.kind != outer.ambient)
        throw CompositionError("inner surface lives in " + to_string(inner.ambient.kind) + ", outer family needs " +
                               to_string(outer.ambient));
    if (inner.dim() != 2) throw CompositionError("inner surface must be 2-dimensional");

    Immersion imm;
    imm.family = &outer;
    imm.variant = "composed:" + inner.id();
    imm.params = inner.params;
    imm.ambient = AmbientModel::of_kind(outer.ambient, 3);
    imm.par.dim = 3;
    imm.par.ambient_dim = 4;
    const bool spherical = outer.ambient == AmbientKind::spherical;
    auto inner_map = inner.par.map;
    imm.par.map = [inner_map, spherical](const ChartPoint& p) {
        CVec w = inner_map({p[1], p[2]});
        CVec out(4);
        if (spherical) {
            out[0] = std::sin(p[0]);
            out.tail(3) = w * std::cos(p[0]);
        } else {
            out.head(3) = w * std::cosh(p[0]);
            out[3] = std::sinh(p[0]);
        }
        return out;
    };
    std::vector<Interval> box{{-1.0, 1.0}};
    box.insert(box.end(), inner.par.domain.box.begin(), inner.par.domain.box.end());
    imm.par.domain = inner.par.domain.pulled_back([](const ChartPoint& p) { return ChartPoint{p[1], p[2]}; }, box);
    if (spherical) imm.par.domain.positive("cos x > 0", [](const ChartPoint& p) { return std::cos(p[0]); });
    return imm;
}

std::string registry_manifest_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : registry()) {
        nlohmann::ordered_json j;
        j["id"] = f.id;
        j["paper_tag"] = f.label;
        j["title"] = f.title;
        j["ambient"] = to_string(f.ambient);
        const ParamSet smoke = f.smoke_params();
        j["n"] = f.dim(smoke);
        j["l"] = f.adapted ? static_cast<int>(f.adapted(smoke).size()) : 0;
        j["tier"] = to_string(f.tier);
        nlohmann::ordered_json ps = nlohmann::ordered_json::array();
        for (const auto& s : f.params) ps.push_back({{"name", s.name}, {"constraint", s.constraint}, {"smoke", s.smoke}});
        j["params"] = ps;
        nlohmann::ordered_json cons = nlohmann::ordered_json::array();
        for (const auto& pr : f.predicates) cons.push_back(pr.text);
        j["constraints"] = cons;
        const Domain d = f.domain(smoke);
        nlohmann::ordered_json dom = nlohmann::ordered_json::array();
        for (const auto& b : d.box) dom.push_back({b.lo, b.hi});
        j["domain"] = dom;
        nlohmann::ordered_json sing = nlohmann::ordered_json::array();
        for (const auto& c : d.constraints) sing.push_back(c.name);
        j["domain_conditions"] = sing;
        nlohmann::ordered_json vs = nlohmann::ordered_json::array();
        for (const auto& v : f.variants) vs.push_back({{"name", v.name}, {"note", v.note}});
        j["variants"] = vs;
        j["notes"] = f.known_issue;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace hsl
