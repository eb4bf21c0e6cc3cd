#pragma once

#include "riesz/energy.hpp"

#include <cstdint>

namespace riesz {

struct OptimizeOptions {
    int max_iterations = 10000;
    double grad_tol = 1e-9;   ///< sup-norm of the projected gradient
    int restarts = 8;
    double jitter = 0.1;      ///< initialization jitter as a fraction of the mean gap, in [0, 0.5)
    std::uint64_t seed = 0;

    void validate() const;
};

struct MinimizeResult {
    Configuration config;
    EnergyReport report;
};

/// Minimizes the discrete kernel energy over n curve parameters by projected
/// gradient descent with Armijo backtracking. Open curves clamp parameters to
/// [0,1]; closed curves wrap modulo 1. Strict parameter ordering is kept by
/// halving any step that would cross two parameters. Runs `restarts`
/// independent starts (the first plain equispaced, the rest jittered) and
/// returns the lowest-energy result, ties broken by restart index.
///
/// Throws no_progress_error when every restart fails its line search at
/// iteration 0.
MinimizeResult minimize_energy(const KernelSpec& spec, const Curve& curve, int n,
                               const OptimizeOptions& opts = OptimizeOptions{});

}  // namespace riesz
