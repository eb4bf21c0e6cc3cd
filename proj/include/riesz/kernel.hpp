#pragma once

#include "riesz/errors.hpp"

namespace riesz {

/// Point x + iy of the closed right half-plane; x is the distance from the
/// rotation axis, y the height along it.
struct HalfPlanePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Throws domain_error unless the coordinates are finite with x >= 0.
void validate_half_plane(const HalfPlanePoint& p);

/// Reflection across the rotation axis, w -> (-x, y). Only meaningful inside
/// distance expressions |z - w*|; the result leaves the half-plane.
HalfPlanePoint reflect(const HalfPlanePoint& w);

enum class KernelVariant { Ks, KsR, KsInf, K0, K1 };

/// Selects one of the reduced kernels on half-plane point pairs:
///   Ks    - ring average of the Riesz s-kernel over one rotation,
///   KsR   - rescaled kernel on the translate R + A,
///   KsInf - the R -> infinity limit kernel ~ |z-w|^{1-s},
///   K0    - logarithmic (s -> 0) limit kernel,
///   K1    - Coulomb kernel via the complete elliptic integral.
struct KernelSpec {
    KernelVariant variant = KernelVariant::Ks;
    double s = 0.0;  ///< exponent, used by Ks / KsR / KsInf
    double R = 0.0;  ///< translate, used by KsR only

    static KernelSpec ks(double s) { return {KernelVariant::Ks, s, 0.0}; }
    static KernelSpec ks_r(double s, double R) { return {KernelVariant::KsR, s, R}; }
    static KernelSpec ks_inf(double s) { return {KernelVariant::KsInf, s, 0.0}; }
    static KernelSpec k0() { return {KernelVariant::K0, 0.0, 0.0}; }
    static KernelSpec k1() { return {KernelVariant::K1, 1.0, 0.0}; }

    void validate() const;

    /// True when evaluation at coincident points is a non-removable singularity.
    bool singular_on_diagonal() const;
};

/// Evaluates the selected kernel at (z, w). Symmetric in its two point
/// arguments by construction. Throws singularity_error on a singular
/// diagonal and domain_error for invalid specs or points.
double kernel_eval(const KernelSpec& spec, const HalfPlanePoint& z, const HalfPlanePoint& w);

/// Independent oracle for the Ks family: trapezoidal rule on the periodic
/// ring integrand (E + F cos psi)^{-s/2}. Spectrally accurate for z != w.
/// `nodes` must be even and >= 16; the half-step node offset keeps the rule
/// away from psi = pi where the integrand can be singular.
double kernel_quadrature(double s, const HalfPlanePoint& z, const HalfPlanePoint& w, int nodes);

/// Uniform-measure s-energy of the unit circle, Gamma(1-s)/Gamma(1-s/2)^2,
/// for 0 < s < 1. This is the diagonal coefficient of Ks.
double i_s_circle(double s);

/// Coefficient Gamma((s-1)/2)/(sqrt(pi) Gamma(s/2)) of the limit kernel;
/// negative for 0 < s < 1, positive for s > 1.
double ks_inf_coefficient(double s);

/// The three displayed terms of the large-R expansion of Ks(R+z, R+w).
/// The omitted remainder is O(s/R^2).
struct ExpansionTerms {
    double leading;        ///< I_s R^{-s}
    double infinity_term;  ///< limit-kernel term, KsInf(z,w)/(2R)
    double drift_term;     ///< -s I_s R^{-s} Re[z - w*]/(2R)

    double sum() const { return leading + infinity_term + drift_term; }
};

ExpansionTerms expansion_terms(double s, const HalfPlanePoint& z, const HalfPlanePoint& w,
                               double R);

}  // namespace riesz
