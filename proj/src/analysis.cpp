#include "riesz/analysis.hpp"
#include "riesz/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrtPi = 1.77245385090551602729816748334;

using specfun::gauss_2f1;
using specfun::ln_gamma;

// ---------------------------------------------------------------------------
// Quadrature utilities
// ---------------------------------------------------------------------------

/// Tanh-sinh rule over (a,b). The integrand receives the abscissa plus its
/// exact distances to both endpoints, so integrable endpoint singularities
/// can be evaluated without cancellation. Adaptive in the level; absolute
/// tolerance `tol`.
double tanh_sinh(const std::function<double(double x, double da, double db)>& f, double a,
                 double b, double tol) {
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    const double umax = 6.0;

    auto level_sum = [&](double h, bool odd_only) {
        double acc = 0.0;
        const int kmax = static_cast<int>(std::floor(umax / h));
        for (int k = odd_only ? 1 : 0; k <= kmax; k += odd_only ? 2 : 1) {
            const double u = k * h;
            const double v = 0.5 * kPi * std::sinh(u);
            const double ap = 2.0 / (1.0 + std::exp(-2.0 * v));  // 1 + tanh v
            const double am = 2.0 / (1.0 + std::exp(2.0 * v));   // 1 - tanh v
            const double w = 0.5 * kPi * std::cosh(u) * ap * am * d;
            if (w < 1e-300) break;
            // node at +u and its mirror
            const double xp = c + d * (ap - 1.0);
            const double xm = c - d * (ap - 1.0);
            acc += w * f(xp, d * ap, d * am);
            if (k > 0) acc += w * f(xm, d * am, d * ap);
        }
        return acc;
    };

    double h = 1.0;
    double sum = level_sum(h, false);
    double prev = h * sum;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        sum += level_sum(h, true);
        const double cur = h * sum;
        if (level >= 3 && std::fabs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    throw nonconvergence_error("tanh_sinh: did not reach requested tolerance");
}

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

/// Composite Gauss integral of g(delta) over delta in [0, width], with
/// dyadic panel refinement toward delta = 0 where g may be singular.
double dyadic_gauss(const std::function<double(double)>& g, double width, int order) {
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    constexpr int kLevels = 64;
    double acc = 0.0;
    double hi = width;
    for (int level = 0; level < kLevels; ++level) {
        const double lo = (level == kLevels - 1) ? 0.0 : hi * 0.5;
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double panel = 0.0;
        for (int i = 0; i < order; ++i) panel += gw[i] * g(mid + half * gx[i]);
        acc += panel * half;
        hi = lo;
        if (hi == 0.0) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Three-point quantity
// ---------------------------------------------------------------------------

void validate_delta_args(double x, double gamma, double s) {
    if (!(x > 0.0)) throw domain_error("delta_s: requires x > 0");
    if (!(gamma > 0.0)) throw domain_error("delta_s: requires gamma > 0");
    if (!(s > 0.0 && s < 1.0)) throw domain_error("delta_s: requires s in (0,1)");
}

}  // namespace

double delta_s(double x, double gamma, double s) {
    validate_delta_args(x, gamma, s);

    // Kernel route through the symmetrized kernel at z' = 1 + i gamma.
    const KernelSpec ks = KernelSpec::ks(s);
    const HalfPlanePoint zx{x, 0.0};
    const HalfPlanePoint zp{1.0, gamma};
    const HalfPlanePoint zc{1.0, -gamma};
    const double value = kernel_eval(ks, zx, zp) -
                         0.5 * (kernel_eval(ks, zp, zp) + kernel_eval(ks, zp, zc));

    // Cross-check against the explicit hypergeometric display.
    const double a1 = (1.0 + x) * (1.0 + x) + gamma * gamma;
    const double display =
        std::pow(a1, -0.5 * s) * gauss_2f1(0.5 * s, 0.5, 1.0, 4.0 * x / a1) -
        0.5 * std::pow(2.0, -s) * std::pow(1.0 + gamma * gamma, -0.5 * s) *
            gauss_2f1(0.5 * s, 0.5, 1.0, 1.0 / (1.0 + gamma * gamma)) -
        0.5 * i_s_circle(s);
    if (std::fabs(value - display) > 1e-11 * std::max(1.0, std::fabs(value)))
        throw std::logic_error("delta_s: kernel route disagrees with the explicit display");
    return value;
}

double delta_small_s_slope(double x, double gamma) {
    if (!(x > 0.0) || !(gamma > 0.0))
        throw domain_error("delta_small_s_slope: requires x > 0 and gamma > 0");
    const double num = 4.0 * (gamma + std::sqrt(1.0 + gamma * gamma));
    const double den = std::sqrt((1.0 + x) * (1.0 + x) + gamma * gamma) +
                       std::sqrt((1.0 - x) * (1.0 - x) + gamma * gamma);
    return 0.5 * std::log(num / (den * den));
}

double find_s1(double x, double gamma) {
    if (!(delta_small_s_slope(x, gamma) > 0.0))
        throw domain_error("find_s1: slope of delta_s at 0+ is not positive");

    const double s_hi = 1.0 - 1e-6;
    constexpr int kScan = 100;
    // Certify a single sign change on the scan grid.
    int change_at = -1;
    double prev = delta_s(x, gamma, s_hi / kScan);
    for (int k = 2; k <= kScan; ++k) {
        const double cur = delta_s(x, gamma, k * s_hi / kScan);
        if (prev > 0.0 && cur <= 0.0) {
            if (change_at >= 0)
                throw nonconvergence_error("find_s1: multiple sign changes on the scan grid");
            change_at = k;
        } else if (prev <= 0.0 && cur > 0.0) {
            throw nonconvergence_error("find_s1: sign pattern is not a single crossing");
        }
        prev = cur;
    }
    if (change_at < 0)
        throw nonconvergence_error("find_s1: delta_s stayed positive up to s = 1 - 1e-6");

    double lo = (change_at - 1) * s_hi / kScan;
    double hi = change_at * s_hi / kScan;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (delta_s(x, gamma, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

DeltaLevelSurface delta_level_surface(std::span<const double> x_grid,
                                      std::span<const double> inv_gamma_grid,
                                      std::span<const double> s_grid) {
    DeltaLevelSurface out;
    out.max_positive_s = std::numeric_limits<double>::quiet_NaN();
    out.cells.reserve(x_grid.size() * inv_gamma_grid.size() * s_grid.size());
    for (double x : x_grid) {
        for (double ig : inv_gamma_grid) {
            if (!(ig > 0.0)) throw domain_error("delta_level_surface: 1/gamma must be positive");
            for (double s : s_grid) {
                const double d = delta_s(x, 1.0 / ig, s);
                const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
                out.cells.push_back({x, ig, s, sign});
                if (sign > 0 && !(out.max_positive_s >= s)) out.max_positive_s = s;
            }
        }
    }
    return out;
}

double vertical_convexity(double R, double delta_y, double s) {
    if (!(R > 0.0)) throw domain_error("vertical_convexity: requires R > 0");
    if (!(s > 0.0 && s < 1.0)) throw domain_error("vertical_convexity: requires s in (0,1)");
    if (delta_y == 0.0)
        throw domain_error("vertical_convexity: second derivative diverges at delta_y = 0");

    const double D2 = delta_y * delta_y;
    const double q = 4.0 * R * R + D2;
    const double m = 4.0 * R * R / q;
    const double term1 = (1.0 + s) * D2 * D2 * gauss_2f1(0.5, 1.0 - 0.5 * s, 1.0, m);
    const double term2 = 2.0 * R * R * (4.0 * s * R * R + (1.0 + 2.0 * s) * D2) *
                         gauss_2f1(0.5, 1.0 - 0.5 * s, 2.0, m);
    return s * (term1 + term2) / (std::pow(q, 2.5) * std::pow(std::fabs(delta_y), 1.0 + s));
}

// ---------------------------------------------------------------------------
// Density models
// ---------------------------------------------------------------------------

DensityModel DensityModel::segment_kinf(double s, double r) {
    if (!(s > 0.0 && s < 1.0)) throw domain_error("segment_kinf: requires s in (0,1)");
    if (!(r > 0.0)) throw domain_error("segment_kinf: requires r > 0");
    DensityModel m;
    m.kind_ = Kind::SegmentKInf;
    m.s_ = s;
    m.r_ = r;
    m.norm_ = std::exp(ln_gamma(0.5 * (1.0 + s)) - ln_gamma(0.5 * s)) / kSqrtPi *
              std::pow(r, 1.0 - s);
    return m;
}

DensityModel DensityModel::segment_hyper(double s, double R, double phi) {
    if (!(s > 2.0)) throw domain_error("segment_hyper: requires s > 2");
    if (!(phi >= 0.0 && phi < kPi)) throw domain_error("segment_hyper: requires phi in [0, pi)");
    if (!(R > std::fabs(std::cos(phi))))
        throw domain_error("segment_hyper: requires R > |cos phi|");
    DensityModel m;
    m.kind_ = Kind::SegmentHyper;
    m.s_ = s;
    m.R_ = R;
    m.phi_ = phi;
    const double c = std::cos(phi);
    if (std::fabs(c) < 1e-12) {
        m.norm_ = 2.0;  // uniform limit of the closed form
    } else {
        const double e = s / (s - 1.0);
        m.norm_ = (s - 1.0) / s * (std::pow(R + c, e) - std::pow(R - c, e)) / c;
    }
    return m;
}

DensityModel DensityModel::circle_hyper(double s, double R) {
    if (!(s > 2.0)) throw domain_error("circle_hyper: requires s > 2");
    if (!(R > 1.0)) throw domain_error("circle_hyper: requires R > 1");
    DensityModel m;
    m.kind_ = Kind::CircleHyper;
    m.s_ = s;
    m.R_ = R;
    const double e = 1.0 / (s - 1.0);
    m.norm_ = tanh_sinh(
        [&](double phi, double, double) { return std::pow((R + std::cos(phi)) / (R + 1.0), e); },
        -kPi, kPi, 1e-12);
    return m;
}

DensityModel DensityModel::uniform_circle() {
    DensityModel m;
    m.kind_ = Kind::UniformCircle;
    return m;
}

DensityModel DensityModel::arcsine(double r) {
    if (!(r > 0.0)) throw domain_error("arcsine: requires r > 0");
    DensityModel m;
    m.kind_ = Kind::Arcsine;
    m.r_ = r;
    return m;
}

double DensityModel::domain_min() const {
    switch (kind_) {
        case Kind::SegmentKInf: return -r_;
        case Kind::Arcsine: return -r_;
        case Kind::SegmentHyper: return -1.0;
        case Kind::CircleHyper:
        case Kind::UniformCircle: return -kPi;
    }
    return 0.0;
}

double DensityModel::domain_max() const {
    switch (kind_) {
        case Kind::SegmentKInf: return r_;
        case Kind::Arcsine: return r_;
        case Kind::SegmentHyper: return 1.0;
        case Kind::CircleHyper:
        case Kind::UniformCircle: return kPi;
    }
    return 0.0;
}

double DensityModel::density(double t) const {
    if (!(t >= domain_min() && t <= domain_max()))
        throw domain_error("DensityModel::density: t outside the domain");
    switch (kind_) {
        case Kind::SegmentKInf:
            return norm_ * std::pow((r_ - t) * (r_ + t), 0.5 * s_ - 1.0);
        case Kind::Arcsine:
            return 1.0 / (kPi * std::sqrt((r_ - t) * (r_ + t)));
        case Kind::SegmentHyper: {
            const double c = std::cos(phi_);
            if (std::fabs(c) < 1e-12) return 0.5;
            return std::pow(R_ + t * c, 1.0 / (s_ - 1.0)) / norm_;
        }
        case Kind::CircleHyper:
            return std::pow((R_ + std::cos(t)) / (R_ + 1.0), 1.0 / (s_ - 1.0)) / norm_;
        case Kind::UniformCircle:
            return 1.0 / (2.0 * kPi);
    }
    throw domain_error("DensityModel::density: unknown kind");
}

double DensityModel::cdf(double t) const {
    const double lo = domain_min();
    const double hi = domain_max();
    if (t < lo - 1e-12 || t > hi + 1e-12)
        throw domain_error("DensityModel::cdf: t outside the domain");
    t = std::clamp(t, lo, hi);
    if (t == lo) return 0.0;

    switch (kind_) {
        case Kind::UniformCircle:
            return (t + kPi) / (2.0 * kPi);
        case Kind::SegmentKInf: {
            // ((r+T)(r-T))^{s/2-1}: evaluate both factors from exact
            // endpoint distances; gap = r - t is the offset of the upper
            // integration limit from the right singularity.
            const double gap = r_ - t;
            const double p = 0.5 * s_ - 1.0;
            return tanh_sinh(
                [&](double, double da, double db) {
                    return norm_ * std::pow(da * (gap + db), p);
                },
                lo, t, 1e-11);
        }
        case Kind::Arcsine: {
            const double gap = r_ - t;
            return tanh_sinh(
                [&](double, double da, double db) {
                    return 1.0 / (kPi * std::sqrt(da * (gap + db)));
                },
                lo, t, 1e-11);
        }
        case Kind::SegmentHyper:
        case Kind::CircleHyper:
            return tanh_sinh([&](double x, double, double) { return density(x); }, lo, t, 1e-11);
    }
    throw domain_error("DensityModel::cdf: unknown kind");
}

// ---------------------------------------------------------------------------
// Empirical distribution distance
// ---------------------------------------------------------------------------

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(std::string("empirical_cdf_distance: ") + msg);
}

bool close(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

/// Maps the configuration parameters into the model's arc coordinate,
/// checking that the curve actually matches the model's geometry.
std::vector<double> arc_coordinates(const Configuration& config, const DensityModel& model) {
    std::vector<double> out;
    out.reserve(config.params.size());
    switch (model.kind()) {
        case DensityModel::Kind::SegmentKInf:
        case DensityModel::Kind::Arcsine: {
            require(config.curve.kind() == CurveKind::Segment, "model expects a segment curve");
            const auto& z0 = config.curve.segment_start();
            const auto& z1 = config.curve.segment_end();
            const double half = 0.5 * std::hypot(z1.x - z0.x, z1.y - z0.y);
            require(close(half, model.r(), 1e-9 * std::max(1.0, model.r())),
                    "segment half-length does not match the model");
            for (double t : config.params) out.push_back((2.0 * t - 1.0) * model.r());
            break;
        }
        case DensityModel::Kind::SegmentHyper: {
            require(config.curve.kind() == CurveKind::Segment, "model expects a segment curve");
            const auto& z0 = config.curve.segment_start();
            const auto& z1 = config.curve.segment_end();
            const double half = 0.5 * std::hypot(z1.x - z0.x, z1.y - z0.y);
            require(close(half, 1.0), "segment must have half-length 1");
            require(close(0.5 * (z0.x + z1.x), model.R()), "segment midpoint must sit at x = R");
            const double ang = std::atan2(z1.y - z0.y, z1.x - z0.x);
            require(close(ang, model.phi()), "segment direction must match phi");
            for (double t : config.params) out.push_back(2.0 * t - 1.0);
            break;
        }
        case DensityModel::Kind::CircleHyper:
        case DensityModel::Kind::UniformCircle: {
            require(config.curve.kind() == CurveKind::Circle, "model expects a circle curve");
            if (model.kind() == DensityModel::Kind::CircleHyper) {
                require(close(config.curve.circle_radius(), 1.0), "circle must have radius 1");
                require(close(config.curve.circle_center().x, model.R()),
                        "circle center must sit at x = R");
            }
            for (double t : config.params) {
                double phi = 2.0 * kPi * t;
                if (phi > kPi) phi -= 2.0 * kPi;
                out.push_back(phi);
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double sup_distance(const std::vector<double>& F) {
    const int n = static_cast<int>(F.size());
    double d = 0.0;
    for (int i = 1; i <= n; ++i) {
        d = std::max(d, std::fabs(double(i) / n - F[i - 1]));
        d = std::max(d, std::fabs(double(i - 1) / n - F[i - 1]));
    }
    return d;
}

/// Minimum of the sup distance over rigid rotations for the uniform circular
/// law, by a fine shift scan (the distance is piecewise linear in the shift).
double aligned_uniform_distance(std::vector<double> F) {
    std::sort(F.begin(), F.end());
    const int n = static_cast<int>(F.size());
    const int samples = 128 * n;
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const double delta = double(s) / samples;
        // Values F_i + delta mod 1, still sorted after a cyclic rotation:
        // the first index with F_i + delta >= 1 wraps to the front.
        const auto split = std::lower_bound(F.begin(), F.end(), 1.0 - delta);
        const int k = static_cast<int>(F.end() - split);  // number wrapped
        double d = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double v =
                (j <= k) ? F[n - k + j - 1] + delta - 1.0 : F[j - k - 1] + delta;
            d = std::max(d, std::fabs(double(j) / n - v));
            d = std::max(d, std::fabs(double(j - 1) / n - v));
        }
        best = std::min(best, d);
    }
    return best;
}

}  // namespace

double empirical_cdf_distance(const Configuration& config, const DensityModel& model,
                              bool align_rotation) {
    const std::vector<double> coords = arc_coordinates(config, model);
    std::vector<double> F;
    F.reserve(coords.size());
    for (double t : coords) F.push_back(model.cdf(t));
    if (align_rotation) {
        if (model.kind() != DensityModel::Kind::UniformCircle)
            throw domain_error(
                "empirical_cdf_distance: rotation alignment only applies to the uniform circle");
        return aligned_uniform_distance(std::move(F));
    }
    return sup_distance(F);
}

// ---------------------------------------------------------------------------
// Auxiliary weighted integral
// ---------------------------------------------------------------------------

double hilfssatz_integral(double alpha, double y, int nodes) {
    if (!(alpha > -1.0 && alpha < 1.0) || alpha == 0.0)
        throw domain_error("hilfssatz_integral: requires alpha in (-1,1), alpha != 0");
    if (!(y >= -1.0 && y <= 1.0)) throw domain_error("hilfssatz_integral: requires |y| <= 1");
    if (nodes < 4 || nodes > 64)
        throw domain_error("hilfssatz_integral: nodes must lie in [4, 64]");

    // After x = sin(theta):  I = int cos^{-alpha}(theta) |sin(theta)-y|^alpha dtheta.
    // Each subrange is parametrized by the distance delta from its singular
    // anchor so that both factors evaluate without cancellation there.
    const double ty = std::asin(std::clamp(y, -1.0, 1.0));
    const double top_gap = 0.5 * kPi - ty;
    const double bot_gap = ty + 0.5 * kPi;

    // theta = pi/2 - delta:  cos = sin(delta), sin - y = (1-y) - 2 sin^2(delta/2)
    auto near_top = [&](double delta) {
        const double sd = std::sin(0.5 * delta);
        return std::pow(std::sin(delta), -alpha) *
               std::pow(std::fabs((1.0 - y) - 2.0 * sd * sd), alpha);
    };
    // theta = -pi/2 + delta: cos = sin(delta), sin - y = -((1+y) - 2 sin^2(delta/2))
    auto near_bottom = [&](double delta) {
        const double sd = std::sin(0.5 * delta);
        return std::pow(std::sin(delta), -alpha) *
               std::pow(std::fabs((1.0 + y) - 2.0 * sd * sd), alpha);
    };
    // theta = ty +- delta: |sin - y| = 2 |cos(ty +- delta/2)| sin(delta/2)
    auto near_y = [&](double delta, double dir) {
        const double theta = ty + dir * delta;
        const double diff = 2.0 * std::fabs(std::cos(ty + dir * 0.5 * delta)) *
                            std::sin(0.5 * delta);
        return std::pow(std::cos(theta), -alpha) * std::pow(diff, alpha);
    };

    double total = 0.0;
    if (top_gap < 1e-9 || bot_gap < 1e-9) {
        // y sits at an extreme; the endpoint forms absorb the |x-y| factor.
        total += dyadic_gauss(near_bottom, 0.5 * kPi, nodes);
        total += dyadic_gauss(near_top, 0.5 * kPi, nodes);
    } else {
        total += dyadic_gauss(near_bottom, 0.5 * bot_gap, nodes);
        total += dyadic_gauss([&](double delta) { return near_y(delta, -1.0); }, 0.5 * bot_gap,
                              nodes);
        total += dyadic_gauss([&](double delta) { return near_y(delta, +1.0); }, 0.5 * top_gap,
                              nodes);
        total += dyadic_gauss(near_top, 0.5 * top_gap, nodes);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Energy scaling
// ---------------------------------------------------------------------------

namespace {

enum class ScalingRegime { Potential, Boundary, Hypersingular };

ScalingRegime regime_of(const KernelSpec& spec) {
    double s = 0.0;
    switch (spec.variant) {
        case KernelVariant::K0: s = 0.0; break;
        case KernelVariant::K1: s = 1.0; break;
        default: s = spec.s; break;
    }
    if (s < 2.0) return ScalingRegime::Potential;
    if (s == 2.0) return ScalingRegime::Boundary;
    return ScalingRegime::Hypersingular;
}

double scale_energy(ScalingRegime regime, double s, int n, double energy) {
    const double nd = n;
    switch (regime) {
        case ScalingRegime::Potential: return energy / (nd * nd);
        case ScalingRegime::Boundary: return energy / (nd * nd * std::log(nd));
        case ScalingRegime::Hypersingular: return energy / std::pow(nd, s);
    }
    return energy;
}

}  // namespace

ScalingEstimate energy_scaling_estimate(const KernelSpec& spec, const Curve& curve,
                                        std::span<const int> n_list,
                                        const OptimizeOptions& opts) {
    spec.validate();
    if (n_list.size() < 3)
        throw domain_error("energy_scaling_estimate: needs at least three point counts");
    for (size_t i = 0; i + 1 < n_list.size(); ++i)
        if (n_list[i + 1] != 2 * n_list[i])
            throw domain_error("energy_scaling_estimate: point counts must double");

    const ScalingRegime regime = regime_of(spec);
    ScalingEstimate out;
    out.table.reserve(n_list.size());

    for (size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        const MinimizeResult res = minimize_energy(spec, curve, n, opts);
        ScalingRow row{};
        row.n = n;
        row.energy = res.report.energy;
        row.scaled = scale_energy(regime, spec.s, n, res.report.energy);
        row.separation = res.report.separation;
        row.extrapolated = std::numeric_limits<double>::quiet_NaN();
        if (i > 0) {
            const ScalingRow& prev = out.table.back();
            if (regime == ScalingRegime::Boundary) {
                // The boundary law approaches its limit like c / log N.
                const double l1 = std::log(double(prev.n));
                const double l2 = std::log(double(n));
                const double c = (prev.scaled - row.scaled) / (1.0 / l1 - 1.0 / l2);
                row.extrapolated = row.scaled - c / l2;
            } else {
                // First-order N^{-1} correction under doubling.
                row.extrapolated = 2.0 * row.scaled - prev.scaled;
            }
        }
        out.table.push_back(row);
    }
    out.limit = out.table.back().extrapolated;
    return out;
}

double angular_coverage_degrees(const Configuration& config) {
    if (config.curve.kind() != CurveKind::Circle)
        throw domain_error("angular_coverage_degrees: configuration must live on a circle");
    const int n = config.size();
    double gmax = 0.0;
    for (int i = 0; i < n; ++i) {
        const double next = (i + 1 < n) ? config.params[i + 1] : config.params[0] + 1.0;
        gmax = std::max(gmax, next - config.params[i]);
    }
    // Arc between the extreme points plus one mean spacing per point cell.
    return std::min(360.0, 360.0 * (1.0 - gmax + 1.0 / n));
}

}  // namespace riesz
