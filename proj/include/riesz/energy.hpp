#pragma once

#include "riesz/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace riesz {

/// N parameter values on a curve plus the induced points; the discrete
/// candidate for the equilibrium measure.
struct Configuration {
    Curve curve;
    std::vector<double> params;          ///< sorted ascending in [0,1)
    std::vector<HalfPlanePoint> points;  ///< points[i] = curve_point(curve, params[i])

    /// Canonicalizes (wraps closed-curve parameters into [0,1), sorts) and
    /// caches the induced points. Requires at least two parameters.
    static Configuration make(Curve curve, std::vector<double> params);

    int size() const { return static_cast<int>(params.size()); }
};

struct EnergyReport {
    double energy = 0.0;
    double gradient_sup_norm = 0.0;
    double separation = 0.0;
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
};

/// Discrete kernel energy: sum over ordered pairs j != k of
/// kernel_eval(spec, z_j, z_k), accumulated row by row in ascending index
/// order (the same reduction tree serial or parallel).
double discrete_energy(const KernelSpec& spec, const Configuration& config);

/// Normalized potential (1/N) sum_k kernel_eval(spec, z, z_k).
double discrete_potential(const KernelSpec& spec, const Configuration& config,
                          const HalfPlanePoint& z);

/// Partial derivatives of discrete_energy with respect to the curve
/// parameters, by central finite differences with step
/// h_i = cbrt(machine epsilon) * max(1, |t_i|). Closed curves difference
/// across the wrap; a neighbor closer than 2h triggers one-sided stencils.
std::vector<double> energy_gradient(const KernelSpec& spec, const Configuration& config);

/// Riesz s-energy of a 3-space point set, sum_{j != k} |x_j - x_k|^{-s}.
double riesz_energy_3d(double s, std::span<const SurfacePoint3> points);

/// Minimal pairwise Euclidean distance of the configuration points.
double separation_radius(const Configuration& config);

namespace detail {
/// Number of kernel_eval calls issued by discrete_energy since the last
/// reset; lets tests pin the O(N^2) cost.
std::uint64_t kernel_eval_count();
void reset_kernel_eval_count();
}  // namespace detail

}  // namespace riesz
