#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hsl {

using ChartPoint = std::vector<double>;

// Named real parameters.  Integer-valued dimensions ("n", "l", "k") are stored as reals
// and read back through integer(), which insists on an integral value.
class ParamSet {
public:
    ParamSet() = default;
    ParamSet(std::initializer_list<std::pair<const std::string, double>> init) : values_(init) {}

    bool has(const std::string& name) const { return values_.count(name) != 0; }
    double get(const std::string& name) const;
    double get_or(const std::string& name, double fallback) const;
    int integer(const std::string& name) const;
    void set(const std::string& name, double v) { values_[name] = v; }

    const std::map<std::string, double>& values() const { return values_; }
    bool operator==(const ParamSet&) const = default;

    // overlay: values in `other` replace ours
    ParamSet merged(const ParamSet& other) const;
    std::string str() const;

private:
    std::map<std::string, double> values_;
};

// Indexed parameter name, e.g. indexed("a", 2) == "a2".
std::string indexed(const std::string& base, int j);

// Parse "k=v" tokens.
ParamSet parse_params(const std::vector<std::string>& tokens);

// Open constraint on a chart point: either value > margin ("positive") or |value| > margin ("nonzero").
struct ChartConstraint {
    enum class Kind { positive, nonzero };
    std::string name;
    Kind kind = Kind::nonzero;
    std::function<double(const ChartPoint&)> value;

    bool satisfied(const ChartPoint& p, double margin) const;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Sampling box plus the open conditions that define the admissible region.
struct Domain {
    std::vector<Interval> box;
    std::vector<ChartConstraint> constraints;

    int dim() const { return static_cast<int>(box.size()); }
    bool admits(const ChartPoint& p, double margin) const;
    // throws DomainError naming the first violated constraint
    void require(const ChartPoint& p, double margin) const;

    Domain& positive(std::string name, std::function<double(const ChartPoint&)> f);
    Domain& nonzero(std::string name, std::function<double(const ChartPoint&)> f);
    // composes every constraint with a chart map (used when reparametrising)
    Domain pulled_back(const std::function<ChartPoint(const ChartPoint&)>& map, std::vector<Interval> new_box) const;
};

}  // namespace hsl
