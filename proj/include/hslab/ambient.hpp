#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hsl {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

inline constexpr cplx I{0.0, 1.0};

struct Signature {
    std::vector<int> signs;

    static Signature euclidean(int m);
    static Signature lorentzian(int m);  // first coordinate timelike

    int size() const { return static_cast<int>(signs.size()); }
    bool timelike_first() const { return !signs.empty() && signs[0] < 0; }
    bool operator==(const Signature&) const = default;
    void validate() const;
};

struct CVector {
    CVec entries;
    Signature signature;

    CVector() = default;
    CVector(CVec e, Signature s);
    int size() const { return static_cast<int>(entries.size()); }
};

enum class AmbientKind { flat, spherical, hyperbolic };

struct AmbientModel {
    AmbientKind kind = AmbientKind::flat;
    int n = 0;  // intrinsic complex dimension
    int m = 0;  // embedding complex dimension
    int epsilon = 0;
    Signature signature;

    static AmbientModel flat(int n);
    static AmbientModel spherical(int n);
    static AmbientModel hyperbolic(int n);
    static AmbientModel of_kind(AmbientKind kind, int n);

    bool is_lift() const { return kind != AmbientKind::flat; }
    // value of <z,z> on the quadric
    double sigma() const { return kind == AmbientKind::hyperbolic ? -1.0 : 1.0; }
    double holomorphic_curvature() const { return 4.0 * epsilon; }
    std::string name() const;
};

std::string to_string(AmbientKind kind);
AmbientKind ambient_kind_from_string(const std::string& s);

cplx herm_inner(const CVector& u, const CVector& v);
double kaehler_form(const CVector& u, const CVector& v);

// Raw-vector variants used on hot paths; the model supplies the signature.
cplx herm(const CVec& u, const CVec& v, const AmbientModel& model);
inline double re_herm(const CVec& u, const CVec& v, const AmbientModel& model) {
    return herm(u, v, model).real();
}

double quadric_residual(const CVector& z, const AmbientModel& model);
double quadric_residual(const CVec& z, const AmbientModel& model);

// (max_j |Re<iz, d_j>|, max_{j,k} |Im<d_j, d_k>|)
std::pair<double, double> legendrian_residuals(const CVector& z, const std::vector<CVector>& tangents,
                                               const AmbientModel& model);
double contact_residual(const CVec& z, const std::vector<CVec>& tangents, const AmbientModel& model);
double isotropy_residual(const std::vector<CVec>& tangents, const AmbientModel& model);

CVector horizontal_project(const CVector& v, const CVector& z, const AmbientModel& model);
CVec horizontal_project(const CVec& v, const CVec& z, const AmbientModel& model);

}  // namespace hsl
