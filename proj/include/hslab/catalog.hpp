#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hslab/ambient.hpp"
#include "hslab/jets.hpp"
#include "hslab/params.hpp"

namespace hsl {

enum class Tier { A, B, Control };
std::string to_string(Tier t);
Tier tier_from_string(const std::string& s);

struct ParamSpec {
    std::string name;
    std::string constraint;  // human-readable, e.g. "m > 0, m != 1"
    double smoke = 0.0;
    double draw_lo = 0.0;    // range for seeded random draws; equal ends keep the value fixed
    double draw_hi = 0.0;
    bool integer = false;
};

struct ParamPredicate {
    std::string text;
    std::function<bool(const ParamSet&)> holds;
};

struct NullitySpec {
    int value = 0;
    bool at_least = false;  // "value or more"
};

// Equations of the lift system checked against a 2-dimensional family's jets.
enum class LiftSystem { none, spherical_sech, flat_exponential };

struct TwistorBinding {
    std::string solution_id;
    std::function<ParamSet(const ParamSet&)> params;  // family params -> solution params
};

struct Family;

// One transcription of a family's closed form.  The first variant is the formula as printed;
// later variants carry a note saying what they change.
struct Variant {
    std::string name;
    std::string note;
    std::function<MapFn(const ParamSet&)> make_map;
    std::function<JetFn(const ParamSet&)> make_jet;  // optional exact derivatives
};

struct Family {
    std::string id;
    std::string label;    // theorem item label shown in reports
    std::string title;
    AmbientKind ambient = AmbientKind::flat;
    Tier tier = Tier::A;
    std::vector<ParamSpec> params;
    std::vector<ParamPredicate> predicates;
    std::function<int(const ParamSet&)> dim;
    std::function<Domain(const ParamSet&)> domain;
    std::vector<Variant> variants;

    // advertised properties, all optional
    std::function<std::vector<int>(const ParamSet&)> adapted;  // indices with h(d_j,d_j) = J d_j
    std::function<Eigen::MatrixXd(const ParamSet&, const ChartPoint&)> metric;
    std::function<NullitySpec(const ParamSet&)> nullity;
    std::optional<TwistorBinding> twistor;
    LiftSystem lift_system = LiftSystem::none;
    bool composition = false;
    std::string inner_default;  // registry id of the default inner surface
    std::string known_issue;    // suspected transcription problem, when one is known
    bool theorem_item = true;   // false for controls

    int epsilon() const;
    ParamSet smoke_params() const;
    ParamSet complete(const ParamSet& given) const;  // smoke values fill the gaps
    void check_admissible(const ParamSet& p) const;  // throws AdmissibilityError
    const Variant& variant(const std::string& name) const;
};

// A family bound to validated parameters and one variant.
struct Immersion {
    const Family* family = nullptr;
    std::string variant;
    ParamSet params;
    AmbientModel ambient;
    Parametrization par;

    int dim() const { return par.dim; }
    CVec operator()(const ChartPoint& p) const { return par(p); }
    std::string id() const;
};

struct FamilySummary {
    std::string id;
    std::string label;
    std::string title;
    std::string ambient;
    Tier tier;
    int n;
    int variants;
};

struct FamilyFilter {
    std::optional<AmbientKind> ambient;
    std::optional<Tier> tier;
    std::optional<int> dim;
};

const std::vector<Family>& registry();
const Family& find_family(const std::string& id);  // throws NotFoundError
std::vector<FamilySummary> list_families(const FamilyFilter& filter = {});

Immersion instantiate(const std::string& id, const ParamSet& params = {}, const std::string& variant = "");
Immersion instantiate(const Family& family, const ParamSet& params, const std::string& variant = "");

enum class SamplingMode { uniform, random };

struct GridSpec {
    int count = 200;
    SamplingMode mode = SamplingMode::random;
    std::uint64_t seed = 1;
    double margin = 0.05;
};

std::vector<ChartPoint> sample_domain(const Domain& domain, const GridSpec& grid);
std::vector<ChartPoint> sample_domain(const Immersion& handle, const GridSpec& grid);

// Seeded admissible parameter draw within the declared draw ranges.
ParamSet draw_params(const Family& family, std::uint64_t seed);

// (sin x, inner(y,z) cos x) over a spherical inner lift, (inner(y,z) cosh x, sinh x) over a hyperbolic one.
Immersion compose_with_inner(const std::string& outer_id, const Immersion& inner);

// Registry manifest as JSON text.
std::string registry_manifest_json();

}  // namespace hsl
