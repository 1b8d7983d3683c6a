#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hslab/catalog.hpp"
#include "hslab/params.hpp"

namespace hsl {

inline constexpr const char* kToolVersion = "hslab 1.0.0";

struct Check {
    std::string name;
    double max_residual = 0.0;
    double rms_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool expected_fail = false;
    std::string note;

    bool operator==(const Check& o) const;
};

struct GridMeta {
    std::uint64_t seed = 1;
    int count = 200;
    int nested = 50;
    double margin = 0.05;
    bool operator==(const GridMeta&) const = default;
};

struct CheckReport {
    std::string family;
    std::string paper_tag;
    std::string tier;
    std::string variant;
    std::vector<std::string> rejected_variants;  // tried before the reported one, with their failing checks
    ParamSet params;
    GridMeta grid;
    std::vector<Check> checks;
    std::string discrepancy;  // non-empty for Tier-B failures
    std::string error;        // per-family failure (sampling, admissibility, evaluation)
    std::string timestamp;
    std::string tool_version = kToolVersion;

    bool passed() const;           // every check passes (expected failures excluded) and no error
    bool required_failure() const; // counts toward a non-zero exit status
    const Check* find(const std::string& name) const;
    bool operator==(const CheckReport& o) const;
};

struct Tolerances {
    std::map<std::string, double> values;
    static Tolerances profile(const std::string& name);  // "default" or "loose"
    double get(const std::string& check) const;
};

struct RunConfig {
    std::vector<std::string> families;            // empty: whole registry
    std::map<std::string, ParamSet> params;       // per-family overrides of the smoke parameters
    std::map<std::string, std::string> variants;  // per-family forced variant
    std::optional<Tier> tier;
    std::string tolerance_profile = "default";
    std::map<std::string, double> tolerance_overrides;
    GridMeta grid;
    int draws = 0;            // extra seeded parameter draws for Tier-A families
    bool promote_variants = true;
    std::string output;
    int workers = 0;          // 0: HSLAB_WORKERS or hardware concurrency
    bool single_thread = false;

    void validate() const;    // throws ConfigError
};

RunConfig run_config_from_json(const std::string& text);

// All checks for one family at one parameter set.
CheckReport verify_family(const Family& family, const ParamSet& params, const RunConfig& config);
std::vector<CheckReport> run_verification(const RunConfig& config);

// Twistor suite: declared equations, analytic-partial cross-check and both scaling transforms per solution.
std::vector<CheckReport> run_twistor_suite(int count = 1000, std::uint64_t seed = 1, const std::string& only = "",
                                           const ParamSet& params = {});

std::string emit_json(const std::vector<CheckReport>& reports, bool with_timestamp = true);
std::string emit_text(const std::vector<CheckReport>& reports);
std::vector<CheckReport> parse_reports(const std::string& json);

int exit_status(const std::vector<CheckReport>& reports);
int worker_count(const RunConfig& config);
std::string utc_timestamp();

}  // namespace hsl
