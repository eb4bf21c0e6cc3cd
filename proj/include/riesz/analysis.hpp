#pragma once

#include "riesz/energy.hpp"
#include "riesz/optimize.hpp"

#include <span>
#include <vector>

namespace riesz {

/// Three-point exclusion quantity at test charge x > 0 against the symmetric
/// pair 1 +- i*gamma: Delta_s = Ks(x, 1+i g) - [Ks(1+ig, 1+ig) + Ks(1+ig, 1-ig)]/2.
/// Positive values exclude x from the support of the equilibrium measure.
/// Built from kernel_eval and cross-checked against the explicit
/// hypergeometric display to 1e-11.
double delta_s(double x, double gamma, double s);

/// Limit of delta_s(x, gamma, s)/s as s -> 0+, in closed logarithmic form.
double delta_small_s_slope(double x, double gamma);

/// The unique zero s1 in (0,1) of s -> delta_s(x, gamma, s), located by
/// bisection to width 1e-9 after a 100-point sign scan certifies a single
/// sign change. Requires a positive slope at 0+.
double find_s1(double x, double gamma);

struct DeltaLevelCell {
    double x;
    double inv_gamma;
    double s;
    int sign;  // +1, 0, or -1
};

struct DeltaLevelSurface {
    std::vector<DeltaLevelCell> cells;
    double max_positive_s;  // largest s with a positive cell; NaN when none
};

DeltaLevelSurface delta_level_surface(std::span<const double> x_grid,
                                      std::span<const double> inv_gamma_grid,
                                      std::span<const double> s_grid);

/// Closed-form second derivative of Ks along a vertical line at distance R
/// from the axis, evaluated at height offset delta_y != 0. Positive for all
/// valid inputs.
double vertical_convexity(double R, double delta_y, double s);

/// Closed-form limit density on a curve with cumulative distribution by
/// quadrature.
class DensityModel {
public:
    enum class Kind { SegmentKInf, SegmentHyper, CircleHyper, UniformCircle, Arcsine };

    /// Limit density of the KsInf kernel on a segment of half-length r, 0<s<1.
    static DensityModel segment_kinf(double s, double r);
    /// Hypersingular (s > 2) limit density on the segment R + t e^{i phi},
    /// |t| <= 1, with R > |cos phi|.
    static DensityModel segment_hyper(double s, double R, double phi);
    /// Hypersingular (s > 2) limit density on the unit circle centered at R > 1.
    static DensityModel circle_hyper(double s, double R);
    static DensityModel uniform_circle();
    /// Arcsine law on [-r, r].
    static DensityModel arcsine(double r);

    Kind kind() const { return kind_; }
    double s() const { return s_; }
    double r() const { return r_; }
    double R() const { return R_; }
    double phi() const { return phi_; }

    double domain_min() const;
    double domain_max() const;

    /// Normalized density at an interior point of the domain.
    double density(double t) const;

    /// Cumulative distribution from domain_min to t (absolute accuracy 1e-10).
    double cdf(double t) const;

private:
    DensityModel() = default;
    Kind kind_ = Kind::UniformCircle;
    double s_ = 0.0, r_ = 0.0, R_ = 0.0, phi_ = 0.0;
    double norm_ = 1.0;  // normalization constant of the closed-form density
};

/// Kolmogorov-style sup distance between the configuration's empirical
/// distribution (in the model's arc coordinate) and the model CDF. With
/// align_rotation (UniformCircle only) the distance is minimized over rigid
/// rotations of the configuration.
double empirical_cdf_distance(const Configuration& config, const DensityModel& model,
                              bool align_rotation = false);

/// Weighted endpoint-singular integral of the classical auxiliary lemma:
/// int_{-1}^{1} (1-x^2)^{-(1+alpha)/2} |x-y|^alpha dx = pi/cos(pi alpha/2),
/// independent of y in [-1,1]. Computed by the sine substitution and a
/// composite Gauss rule with dyadic refinement toward the singular points;
/// `nodes` is the Gauss order per panel.
double hilfssatz_integral(double alpha, double y, int nodes);

struct ScalingRow {
    int n;
    double energy;
    double scaled;        ///< energy divided by the regime's growth law
    double extrapolated;  ///< running extrapolation (NaN on the first row)
    double separation;
};

struct ScalingEstimate {
    double limit;
    std::vector<ScalingRow> table;
};

/// Runs minimize_energy for each n, rescales per regime -- E/N^2 (s < 2),
/// E/(N^2 log N) (s = 2), E/N^{1+(s-1)} (s > 2, curves) -- and extrapolates
/// the limit. n_list needs >= 3 entries, each double the previous.
ScalingEstimate energy_scaling_estimate(const KernelSpec& spec, const Curve& curve,
                                        std::span<const int> n_list,
                                        const OptimizeOptions& opts = OptimizeOptions{});

/// Angular coverage of a configuration on a circle, in degrees: the arc
/// between the extreme points across the largest gap, credited with one mean
/// spacing, capped at 360.
double angular_coverage_degrees(const Configuration& config);

}  // namespace riesz
