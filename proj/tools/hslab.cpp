#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hslab/catalog.hpp"
#include "hslab/diffgeo.hpp"
#include "hslab/errors.hpp"
#include "hslab/specfun.hpp"
#include "hslab/twistor.hpp"
#include "hslab/verify.hpp"

using namespace hsl;
using json = nlohmann::json;

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError("not a number list: '" + s + "'");
        }
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string render(const std::vector<CheckReport>& reports, const std::string& format) {
    return format == "text" ? emit_text(reports) : emit_json(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for H-stationary Lagrangian submanifolds of complex space forms"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "Browse the family registry");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List registered families");
    bool list_json = false;
    std::string list_tier, list_ambient;
    list->add_flag("--json", list_json, "Emit the registry manifest as JSON");
    list->add_option("--tier", list_tier, "Filter by tier (A, B, Control)");
    list->add_option("--ambient", list_ambient, "Filter by ambient (flat, spherical, hyperbolic)");
    auto* describe = catalog->add_subcommand("describe", "Describe one family");
    std::string describe_id;
    describe->add_option("id", describe_id)->required();

    auto* verify = app.add_subcommand("verify", "Run every check on one family");
    std::string verify_id, tol_profile = "default", out_path, format = "json", variant;
    std::vector<std::string> params;
    RunConfig vcfg;
    verify->add_option("id", verify_id)->required();
    verify->add_option("--param", params, "Parameter assignment k=v");
    verify->add_option("--grid", vcfg.grid.count, "Grid size");
    verify->add_option("--nested", vcfg.grid.nested, "Points used by the nested-difference checks");
    verify->add_option("--seed", vcfg.grid.seed, "Grid seed");
    verify->add_option("--tol-profile", tol_profile, "Tolerance profile (default, loose)");
    verify->add_option("--variant", variant, "Force one variant of the closed form");
    verify->add_option("--out", out_path, "Write the report here instead of stdout");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--single-thread", vcfg.single_thread, "Serial execution");

    auto* twistor = app.add_subcommand("twistor", "Twistor equation residuals");
    twistor->require_subcommand(1);
    auto* residual = twistor->add_subcommand("residual", "Residuals of one registered solution (or all)");
    std::string solution;
    std::vector<std::string> tparams;
    int tgrid = 1000;
    std::uint64_t tseed = 1;
    residual->add_option("--solution", solution, "Solution id; omit for the whole registry");
    residual->add_option("--param", tparams, "Parameter assignment k=v");
    residual->add_option("--grid", tgrid, "Number of random points");
    residual->add_option("--seed", tseed, "Grid seed");
    residual->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* variation = app.add_subcommand("variation", "First variation of volume under a Hamiltonian bump");
    std::string var_id, center;
    std::vector<std::string> vparams;
    double radius = 0.5, amplitude = 1.0;
    variation->add_option("id", var_id)->required();
    variation->add_option("--center", center, "Bump center x,y,...")->required();
    variation->add_option("--radius", radius, "Bump radius")->required();
    variation->add_option("--amplitude", amplitude, "Bump amplitude");
    variation->add_option("--param", vparams, "Parameter assignment k=v");

    auto* bessel = app.add_subcommand("bessel", "Bessel function of complex order by its power series");
    double nu_re = 0, nu_im = 0, z_re = 0, z_im = 0;
    bessel->add_option("--nu-re", nu_re, "Real part of the order");
    bessel->add_option("--nu-im", nu_im, "Imaginary part of the order");
    bessel->add_option("--z", z_re, "Argument (real part)")->required();
    bessel->add_option("--z-im", z_im, "Argument (imaginary part)");

    auto* sweep = app.add_subcommand("sweep", "Batch verification from a JSON run configuration");
    std::string config_path;
    bool sweep_single = false;
    sweep->add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out_path, "Override the configured output path");
    sweep->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sweep->add_flag("--single-thread", sweep_single, "Serial execution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            if (list_json) {
                std::cout << registry_manifest_json() << "\n";
                return 0;
            }
            FamilyFilter filter;
            if (!list_tier.empty()) filter.tier = tier_from_string(list_tier);
            if (!list_ambient.empty()) filter.ambient = ambient_kind_from_string(list_ambient);
            for (const auto& s : list_families(filter))
                std::cout << std::left << std::setw(22) << s.id << std::setw(9) << to_string(s.tier) << std::setw(18)
                          << s.ambient << "n=" << std::setw(4) << s.n << s.label << "\n";
            return 0;
        }
        if (describe->parsed()) {
            find_family(describe_id);
            const auto manifest = nlohmann::ordered_json::parse(registry_manifest_json());
            for (const auto& f : manifest)
                if (f.at("id") == describe_id) std::cout << f.dump(2) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            vcfg.families = {verify_id};
            vcfg.params[verify_id] = parse_params(params);
            if (!variant.empty()) vcfg.variants[verify_id] = variant;
            vcfg.tolerance_profile = tol_profile;
            if (!verify->count("--nested")) vcfg.grid.nested = std::min(vcfg.grid.nested, vcfg.grid.count);
            const auto reports = run_verification(vcfg);
            write_output(render(reports, format), out_path);
            return exit_status(reports);
        }
        if (residual->parsed()) {
            const auto reports = run_twistor_suite(tgrid, tseed, solution, parse_params(tparams));
            std::cout << render(reports, format);
            return exit_status(reports);
        }
        if (variation->parsed()) {
            const Immersion imm = instantiate(var_id, parse_params(vparams));
            Bump bump;
            bump.center = parse_list(center);
            bump.radius = radius;
            bump.amplitude = amplitude;
            const FirstVariation fv = first_variation(imm, bump);
            json j = {{"family", imm.id()}, {"center", bump.center}, {"radius", radius}, {"amplitude", amplitude},
                      {"dvol_dt", fv.dvol_dt},  {"predicted", fv.predicted}, {"volume", fv.volume}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (bessel->parsed()) {
            const SeriesValue v = bessel_j({nu_re, nu_im}, {z_re, z_im});
            json j = {{"nu", {nu_re, nu_im}},
                      {"z", {z_re, z_im}},
                      {"value", {v.value.real(), v.value.imag()}},
                      {"error_estimate", v.error_estimate},
                      {"terms", v.terms}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (sweep->parsed()) {
            std::ifstream f(config_path);
            std::stringstream buf;
            buf << f.rdbuf();
            RunConfig cfg = run_config_from_json(buf.str());
            if (sweep_single) cfg.single_thread = true;
            if (!out_path.empty()) cfg.output = out_path;
            const auto reports = run_verification(cfg);
            write_output(render(reports, format), cfg.output);
            return exit_status(reports);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 2;
    } catch (const AdmissibilityError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
