#include "riesz/kernel.hpp"
#include "riesz/specfun.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrtPi = 1.77245385090551602729816748334;

using specfun::gauss_2f1;

/// Pairwise distances |z-w| and |z-w*|; both symmetric expressions.
struct PairDistances {
    double dzw;   // |z - w|
    double dzws;  // |z - w*|
};

PairDistances distances(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const double dy = z.y - w.y;
    return {std::hypot(z.x - w.x, dy), std::hypot(z.x + w.x, dy)};
}

/// Hypergeometric argument 1 - |z-w|^2/|z-w*|^2 = 4 x u / |z-w*|^2, computed
/// from the product form which stays accurate when the two distances nearly
/// coincide (far field) and when they differ strongly (near diagonal).
double hyp_argument(const HalfPlanePoint& z, const HalfPlanePoint& w, double dzws) {
    const double zeta = 4.0 * z.x * w.x / (dzws * dzws);
    return std::min(zeta, 1.0);
}

double eval_ks(double s, const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const auto [dzw, dzws] = distances(z, w);

    if (z.x == 0.0 || w.x == 0.0) {
        // One point on the rotation axis: the ring degenerates.
        if (dzw == 0.0) throw singularity_error("Ks: coincident points on the axis");
        return std::pow(dzw, -s);
    }
    if (dzw == 0.0) {
        if (s >= 1.0) throw singularity_error("Ks: singular on the diagonal for s >= 1");
        return i_s_circle(s) * std::pow(w.x, -s);
    }

    const double zeta = hyp_argument(z, w, dzws);
    if (s < 1.0) return std::pow(dzws, -s) * gauss_2f1(0.5 * s, 0.5, 1.0, zeta);
    if (s > 1.0)
        return std::pow(dzw, 1.0 - s) / dzws * gauss_2f1(1.0 - 0.5 * s, 0.5, 1.0, zeta);
    // s == 1: the elliptic-integral form is the stable representation.
    return kernel_eval(KernelSpec::k1(), z, w);
}

double eval_k0(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const auto [dzw, dzws] = distances(z, w);
    const double denom = dzw + dzws;
    if (denom == 0.0) throw singularity_error("K0: coincident points on the axis");
    return std::log(2.0 / denom);
}

double eval_k1(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const auto [dzw, dzws] = distances(z, w);
    if (dzw == 0.0) throw singularity_error("K1: singular on the diagonal");
    const double sum = dzws + dzw;
    const double xi = 4.0 * z.x * w.x / (sum * sum);  // (|z-w*|-|z-w|)/(|z-w*|+|z-w|)
    const double m = std::min(xi * xi, 1.0 - 1e-16);
    return (2.0 / kPi) * (2.0 / sum) * specfun::elliptic_k(m);
}

double eval_ks_inf(double s, const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const auto [dzw, dzws] = distances(z, w);
    (void)dzws;
    if (s > 1.0 && dzw == 0.0)
        throw singularity_error("KsInf: singular on the diagonal for s > 1");
    return ks_inf_coefficient(s) * std::pow(dzw, 1.0 - s);
}

double eval_ks_r(double s, double R, const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const HalfPlanePoint zt{R + z.x, z.y};
    const HalfPlanePoint wt{R + w.x, w.y};
    if (s < 1.0) return 2.0 * R * (eval_ks(s, zt, wt) - i_s_circle(s) * std::pow(R, -s));
    return 2.0 * R * eval_ks(s, zt, wt);
}

}  // namespace

void validate_half_plane(const HalfPlanePoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw domain_error("half-plane point must have finite coordinates");
    if (p.x < 0.0) throw domain_error("half-plane point must have x >= 0");
}

HalfPlanePoint reflect(const HalfPlanePoint& w) { return {-w.x, w.y}; }

void KernelSpec::validate() const {
    switch (variant) {
        case KernelVariant::Ks:
            if (!(s > 0.0)) throw domain_error("KernelSpec: Ks requires s > 0");
            break;
        case KernelVariant::KsR:
            if (!(s > 0.0)) throw domain_error("KernelSpec: KsR requires s > 0");
            if (s == 1.0)
                throw unsupported_parameter_error(
                    "KernelSpec: KsR at s = 1 has a logarithmic expansion, not supported");
            if (!(R > 0.0)) throw domain_error("KernelSpec: KsR requires R > 0");
            break;
        case KernelVariant::KsInf:
            if (!(s > 0.0) || s == 1.0)
                throw domain_error("KernelSpec: KsInf requires s in (0,1) or s > 1");
            break;
        case KernelVariant::K0:
        case KernelVariant::K1:
            break;
    }
}

bool KernelSpec::singular_on_diagonal() const {
    switch (variant) {
        case KernelVariant::Ks: return s >= 1.0;
        case KernelVariant::KsR: return s >= 1.0;
        case KernelVariant::KsInf: return s > 1.0;
        case KernelVariant::K0: return false;  // singular only on the axis itself
        case KernelVariant::K1: return true;
    }
    return true;
}

double kernel_eval(const KernelSpec& spec, const HalfPlanePoint& z, const HalfPlanePoint& w) {
    spec.validate();
    validate_half_plane(z);
    validate_half_plane(w);
    switch (spec.variant) {
        case KernelVariant::Ks: return eval_ks(spec.s, z, w);
        case KernelVariant::KsR: return eval_ks_r(spec.s, spec.R, z, w);
        case KernelVariant::KsInf: return eval_ks_inf(spec.s, z, w);
        case KernelVariant::K0: return eval_k0(z, w);
        case KernelVariant::K1: return eval_k1(z, w);
    }
    throw domain_error("kernel_eval: unknown variant");
}

double kernel_quadrature(double s, const HalfPlanePoint& z, const HalfPlanePoint& w, int nodes) {
    if (!(s > 0.0)) throw domain_error("kernel_quadrature: requires s > 0");
    if (nodes < 16 || nodes % 2 != 0)
        throw domain_error("kernel_quadrature: nodes must be even and >= 16");
    validate_half_plane(z);
    validate_half_plane(w);

    const double dy = z.y - w.y;
    const double E = z.x * z.x + w.x * w.x + dy * dy;
    const double F = 2.0 * z.x * w.x;
    if (E - F == 0.0 && s >= 1.0)
        throw singularity_error("kernel_quadrature: non-integrable at z = w for s >= 1");
    if (E == 0.0) throw singularity_error("kernel_quadrature: coincident axis points");

    // Periodic trapezoid with half-step offset; even node counts never place
    // a node at psi = pi.
    const double h = 2.0 * kPi / nodes;
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double psi = -kPi + (k + 0.5) * h;
        sum += std::pow(E + F * std::cos(psi), -0.5 * s);
    }
    return sum / nodes;
}

double i_s_circle(double s) {
    if (!(s > 0.0 && s < 1.0)) throw domain_error("i_s_circle: requires s in (0,1)");
    using specfun::ln_gamma;
    const double primary = std::exp(ln_gamma(1.0 - s) - 2.0 * ln_gamma(1.0 - 0.5 * s));
    const double alt =
        std::pow(2.0, -s) * std::exp(ln_gamma(0.5 * (1.0 - s)) - ln_gamma(1.0 - 0.5 * s)) / kSqrtPi;
    if (std::fabs(primary - alt) > 1e-12 * std::fabs(primary))
        throw std::logic_error("i_s_circle: gamma-form cross-check failed");
    return primary;
}

double ks_inf_coefficient(double s) {
    if (!(s > 0.0) || s == 1.0)
        throw domain_error("ks_inf_coefficient: requires s in (0,1) or s > 1");
    using specfun::ln_gamma;
    if (s > 1.0) return std::exp(ln_gamma(0.5 * (s - 1.0)) - ln_gamma(0.5 * s)) / kSqrtPi;
    // For 0 < s < 1 use Gamma((s-1)/2) = -2/(1-s) Gamma((1+s)/2).
    return -(2.0 / (1.0 - s)) * std::exp(ln_gamma(0.5 * (1.0 + s)) - ln_gamma(0.5 * s)) / kSqrtPi;
}

ExpansionTerms expansion_terms(double s, const HalfPlanePoint& z, const HalfPlanePoint& w,
                               double R) {
    if (!(s > 0.0 && s < 1.0)) throw domain_error("expansion_terms: requires s in (0,1)");
    validate_half_plane(z);
    validate_half_plane(w);
    if (!(R > std::max(std::hypot(z.x, z.y), std::hypot(w.x, w.y))))
        throw domain_error("expansion_terms: requires R > max(|z|, |w|)");

    const double is = i_s_circle(s);
    const double dzw = std::hypot(z.x - w.x, z.y - w.y);
    ExpansionTerms t{};
    t.leading = is * std::pow(R, -s);
    t.infinity_term = ks_inf_coefficient(s) * std::pow(dzw, 1.0 - s) / (2.0 * R);
    t.drift_term = -s * t.leading * (z.x + w.x) / (2.0 * R);
    return t;
}

}  // namespace riesz
