#include "hslab/ambient.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/errors.hpp"

namespace hsl {

Signature Signature::euclidean(int m) {
    if (m < 1) throw DimensionError("signature length must be at least 1");
    return Signature{std::vector<int>(m, 1)};
}

Signature Signature::lorentzian(int m) {
    Signature s = euclidean(m);
    s.signs[0] = -1;
    return s;
}

void Signature::validate() const {
    if (signs.empty()) throw DimensionError("empty signature");
    for (int s : signs)
        if (s != 1 && s != -1) throw DimensionError("signature entries must be +1 or -1");
}

CVector::CVector(CVec e, Signature s) : entries(std::move(e)), signature(std::move(s)) {
    if (entries.size() != signature.size())
        throw DimensionError("vector length " + std::to_string(entries.size()) +
                             " does not match signature length " + std::to_string(signature.size()));
}

AmbientModel AmbientModel::flat(int n) {
    return {AmbientKind::flat, n, n, 0, Signature::euclidean(n)};
}

AmbientModel AmbientModel::spherical(int n) {
    return {AmbientKind::spherical, n, n + 1, 1, Signature::euclidean(n + 1)};
}

AmbientModel AmbientModel::hyperbolic(int n) {
    return {AmbientKind::hyperbolic, n, n + 1, -1, Signature::lorentzian(n + 1)};
}

AmbientModel AmbientModel::of_kind(AmbientKind kind, int n) {
    switch (kind) {
        case AmbientKind::flat: return flat(n);
        case AmbientKind::spherical: return spherical(n);
        case AmbientKind::hyperbolic: return hyperbolic(n);
    }
    throw UnsupportedModelError("unknown ambient kind");
}

std::string to_string(AmbientKind kind) {
    switch (kind) {
        case AmbientKind::flat: return "flat";
        case AmbientKind::spherical: return "spherical-lift";
        case AmbientKind::hyperbolic: return "hyperbolic-lift";
    }
    return "?";
}

AmbientKind ambient_kind_from_string(const std::string& s) {
    if (s == "flat") return AmbientKind::flat;
    if (s == "spherical-lift" || s == "spherical") return AmbientKind::spherical;
    if (s == "hyperbolic-lift" || s == "hyperbolic") return AmbientKind::hyperbolic;
    throw ConfigError("unknown ambient '" + s + "'");
}

std::string AmbientModel::name() const {
    switch (kind) {
        case AmbientKind::flat: return "C^" + std::to_string(n);
        case AmbientKind::spherical: return "CP^" + std::to_string(n);
        case AmbientKind::hyperbolic: return "CH^" + std::to_string(n);
    }
    return "?";
}

cplx herm_inner(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw DimensionError("herm_inner: length mismatch");
    if (!(u.signature == v.signature)) throw DimensionError("herm_inner: signature mismatch");
    cplx acc = 0.0;
    for (int a = 0; a < u.size(); ++a)
        acc += static_cast<double>(u.signature.signs[a]) * u.entries[a] * std::conj(v.entries[a]);
    return acc;
}

double kaehler_form(const CVector& u, const CVector& v) { return -herm_inner(u, v).imag(); }

cplx herm(const CVec& u, const CVec& v, const AmbientModel& model) {
    if (u.size() != v.size() || u.size() != model.m)
        throw DimensionError("herm: expected length " + std::to_string(model.m) + ", got " +
                             std::to_string(u.size()) + " and " + std::to_string(v.size()));
    cplx acc = 0.0;
    for (Eigen::Index a = 0; a < u.size(); ++a) acc += u[a] * std::conj(v[a]);
    if (model.kind == AmbientKind::hyperbolic) acc -= 2.0 * u[0] * std::conj(v[0]);
    return acc;
}

namespace {
void require_signature(const CVector& z, const AmbientModel& model) {
    if (z.size() != model.m) throw DimensionError("vector length does not match ambient dimension");
    if (!(z.signature == model.signature)) throw DimensionError("vector signature does not match ambient");
}
}  // namespace

double quadric_residual(const CVec& z, const AmbientModel& model) {
    if (!model.is_lift()) throw UnsupportedModelError("quadric residual is undefined for the flat model");
    return std::abs(herm(z, z, model).real() - model.sigma());
}

double quadric_residual(const CVector& z, const AmbientModel& model) {
    require_signature(z, model);
    return quadric_residual(z.entries, model);
}

double contact_residual(const CVec& z, const std::vector<CVec>& tangents, const AmbientModel& model) {
    double r = 0.0;
    CVec iz = I * z;
    for (const auto& t : tangents) r = std::max(r, std::abs(re_herm(iz, t, model)));
    return r;
}

double isotropy_residual(const std::vector<CVec>& tangents, const AmbientModel& model) {
    double r = 0.0;
    for (size_t j = 0; j < tangents.size(); ++j)
        for (size_t k = j + 1; k < tangents.size(); ++k)
            r = std::max(r, std::abs(herm(tangents[j], tangents[k], model).imag()));
    return r;
}

std::pair<double, double> legendrian_residuals(const CVector& z, const std::vector<CVector>& tangents,
                                               const AmbientModel& model) {
    require_signature(z, model);
    std::vector<CVec> t;
    t.reserve(tangents.size());
    for (const auto& v : tangents) {
        require_signature(v, model);
        t.push_back(v.entries);
    }
    return {contact_residual(z.entries, t, model), isotropy_residual(t, model)};
}

CVec horizontal_project(const CVec& v, const CVec& z, const AmbientModel& model) {
    if (!model.is_lift()) throw UnsupportedModelError("horizontal projection needs a lift model");
    const double zz = herm(z, z, model).real();
    if (std::abs(zz) < 1e-300) throw DegeneracyError("horizontal projection at a null vector");
    CVec iz = I * z;
    const double a = re_herm(v, z, model) / zz;
    const double b = re_herm(v, iz, model) / zz;
    return v - a * z - b * iz;
}

CVector horizontal_project(const CVector& v, const CVector& z, const AmbientModel& model) {
    require_signature(v, model);
    require_signature(z, model);
    return CVector(horizontal_project(v.entries, z.entries, model), model.signature);
}

}  // namespace hsl
