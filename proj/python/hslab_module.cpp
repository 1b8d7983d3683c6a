#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hslab/catalog.hpp"
#include "hslab/diffgeo.hpp"
#include "hslab/errors.hpp"
#include "hslab/specfun.hpp"
#include "hslab/twistor.hpp"
#include "hslab/verify.hpp"

namespace py = pybind11;
using namespace hsl;

namespace {

ParamSet to_params(const std::map<std::string, double>& m) {
    ParamSet p;
    for (const auto& [k, v] : m) p.set(k, v);
    return p;
}

std::string verify_json(const std::string& id, const std::map<std::string, double>& params, int grid, int nested,
                        std::uint64_t seed, const std::string& variant, const std::string& tol_profile, int workers) {
    RunConfig c;
    c.families = {id};
    c.params[id] = to_params(params);
    if (!variant.empty()) c.variants[id] = variant;
    c.grid.count = grid;
    c.grid.nested = std::min(nested, grid);
    c.grid.seed = seed;
    c.tolerance_profile = tol_profile;
    c.workers = workers;
    const auto reports = run_verification(c);
    return emit_json(reports, false);
}

std::string sweep_json(const std::string& config) {
    return emit_json(run_verification(run_config_from_json(config)), false);
}

py::dict geometry(const std::string& id, const std::vector<double>& point, const std::map<std::string, double>& params,
                  const std::string& variant) {
    const Immersion imm = instantiate(id, to_params(params), variant);
    const GeometryAtPoint g = geometry_at(imm, point);
    py::dict out;
    out["metric"] = g.g;
    out["mean_curvature"] = CVec(g.H);
    out["h_norm"] = h_norm(g);
    out["nullity"] = relative_nullity(g);
    out["lagrangian_residual"] = lagrangian_residual(g.jet, imm.ambient);
    out["normality_residual"] = normality_residual(g, imm.ambient);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Verification toolkit for H-stationary Lagrangian submanifolds of complex space forms";
    m.attr("version") = kToolVersion;

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<NotFoundError>(m, "NotFoundError", base.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SupportError>(m, "SupportError", base.ptr());
    py::register_exception<UnsupportedModelError>(m, "UnsupportedModelError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());

    m.def("manifest_json", &registry_manifest_json);

    m.def(
        "evaluate",
        [](const std::string& id, const std::vector<double>& point, const std::map<std::string, double>& params,
           const std::string& variant) { return CVec(instantiate(id, to_params(params), variant)(point)); },
        py::arg("family"), py::arg("point"), py::arg("params") = std::map<std::string, double>{},
        py::arg("variant") = "");
    m.def("geometry", &geometry, py::arg("family"), py::arg("point"),
          py::arg("params") = std::map<std::string, double>{}, py::arg("variant") = "");

    m.def("verify_json", &verify_json, py::arg("family"), py::arg("params") = std::map<std::string, double>{},
          py::arg("grid") = 200, py::arg("nested") = 50, py::arg("seed") = 1, py::arg("variant") = "",
          py::arg("tol_profile") = "default", py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("sweep_json", &sweep_json, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "twistor_json",
        [](const std::string& solution, const std::map<std::string, double>& params, int grid, std::uint64_t seed) {
            return emit_json(run_twistor_suite(grid, seed, solution, to_params(params)), false);
        },
        py::arg("solution") = "", py::arg("params") = std::map<std::string, double>{}, py::arg("grid") = 1000,
        py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());

    m.def(
        "first_variation",
        [](const std::string& id, const std::vector<double>& center, double radius, double amplitude,
           const std::map<std::string, double>& params) {
            Bump b;
            b.center = center;
            b.radius = radius;
            b.amplitude = amplitude;
            const FirstVariation fv = first_variation(instantiate(id, to_params(params)), b);
            py::dict out;
            out["dvol_dt"] = fv.dvol_dt;
            out["predicted"] = fv.predicted;
            out["volume"] = fv.volume;
            return out;
        },
        py::arg("family"), py::arg("center"), py::arg("radius"), py::arg("amplitude") = 1.0,
        py::arg("params") = std::map<std::string, double>{});

    m.def("gamma", &gamma_complex, py::arg("z"));
    m.def(
        "bessel_j",
        [](cplx nu, cplx z) {
            const SeriesValue v = bessel_j(nu, z);
            return py::make_tuple(v.value, v.error_estimate, v.terms);
        },
        py::arg("nu"), py::arg("z"));
    m.def(
        "fresnel_bessel",
        [](cplx nu, double r, double tol) {
            const QuadratureValue v = fresnel_bessel_integral(nu, r, tol);
            return py::make_tuple(v.value, v.error_estimate, v.intervals);
        },
        py::arg("nu"), py::arg("r"), py::arg("tol") = 1e-10);
}
