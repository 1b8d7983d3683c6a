#include "family_util.hpp"

namespace hsl::fam {

void add_control_families(std::vector<Family>& out) {
    Family f;
    f.id = "control.graph";
    f.label = "negative control";
    f.title = "Lagrangian graph (x + i x^2, y), not Hamiltonian-stationary";
    f.ambient = AmbientKind::flat;
    f.tier = Tier::Control;
    f.theorem_item = false;
    f.dim = fixed_dim(2);
    f.domain = [](const ParamSet&) { return box_domain({{-1, 1}, {-1, 1}}); };
    f.variants = {exact_variant("as-printed", "", [](const ParamSet&) {
        return [](const auto& x) {
            using T = std::decay_t<decltype(x[0])>;
            return std::vector<T>{x[0] + I * x[0] * x[0], x[1]};
        };
    })};
    f.metric = [](const ParamSet&, const ChartPoint& x) { return diag_metric({1 + 4 * x[0] * x[0], 1}); };
    f.nullity = nullity_exact(1);
    out.push_back(f);
}

}  // namespace hsl::fam
