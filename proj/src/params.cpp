#include "hslab/params.hpp"

#include <cmath>
#include <sstream>

#include "hslab/errors.hpp"

namespace hsl {

double ParamSet::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw ConfigError("missing parameter '" + name + "'");
    return it->second;
}

double ParamSet::get_or(const std::string& name, double fallback) const {
    auto it = values_.find(name);
    return it == values_.end() ? fallback : it->second;
}

int ParamSet::integer(const std::string& name) const {
    const double v = get(name);
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-12) throw AdmissibilityError("parameter '" + name + "' must be an integer");
    return static_cast<int>(r);
}

ParamSet ParamSet::merged(const ParamSet& other) const {
    ParamSet out = *this;
    for (const auto& [k, v] : other.values_) out.values_[k] = v;
    return out;
}

std::string ParamSet::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : values_) {
        if (!first) os << ' ';
        first = false;
        os << k << '=' << v;
    }
    return os.str();
}

std::string indexed(const std::string& base, int j) { return base + std::to_string(j); }

ParamSet parse_params(const std::vector<std::string>& tokens) {
    ParamSet p;
    for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("parameter '" + t + "' is not of the form k=v");
        const std::string key = t.substr(0, eq);
        const std::string val = t.substr(eq + 1);
        try {
            size_t used = 0;
            double v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            p.set(key, v);
        } catch (const std::exception&) {
            throw ConfigError("parameter '" + key + "' has non-numeric value '" + val + "'");
        }
    }
    return p;
}

bool ChartConstraint::satisfied(const ChartPoint& p, double margin) const {
    const double v = value(p);
    if (!std::isfinite(v)) return false;
    return kind == Kind::positive ? v > margin : std::abs(v) > margin;
}

bool Domain::admits(const ChartPoint& p, double margin) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (double x : p)
        if (!std::isfinite(x)) return false;
    for (const auto& c : constraints)
        if (!c.satisfied(p, margin)) return false;
    return true;
}

void Domain::require(const ChartPoint& p, double margin) const {
    if (static_cast<int>(p.size()) != dim())
        throw DimensionError("chart point has " + std::to_string(p.size()) + " coordinates, expected " +
                             std::to_string(dim()));
    for (const auto& c : constraints)
        if (!c.satisfied(p, margin)) {
            std::ostringstream os;
            os << "point violates '" << c.name << "' (value " << c.value(p) << ", margin " << margin << ")";
            throw DomainError(os.str());
        }
}

Domain& Domain::positive(std::string name, std::function<double(const ChartPoint&)> f) {
    constraints.push_back({std::move(name), ChartConstraint::Kind::positive, std::move(f)});
    return *this;
}

Domain& Domain::nonzero(std::string name, std::function<double(const ChartPoint&)> f) {
    constraints.push_back({std::move(name), ChartConstraint::Kind::nonzero, std::move(f)});
    return *this;
}

Domain Domain::pulled_back(const std::function<ChartPoint(const ChartPoint&)>& map,
                           std::vector<Interval> new_box) const {
    Domain d;
    d.box = std::move(new_box);
    for (const auto& c : constraints) {
        auto f = c.value;
        d.constraints.push_back({c.name, c.kind, [f, map](const ChartPoint& p) { return f(map(p)); }});
    }
    return d;
}

}  // namespace hsl
