#include "riesz/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

namespace riesz {

namespace {

constexpr double kArmijoDecrease = 1e-4;
constexpr double kBacktrackFactor = 0.5;
constexpr double kMinStep = 1e-18;

struct RunResult {
    std::vector<double> params;
    double energy = 0.0;
    double grad_sup = 0.0;
    int iterations = 0;
    bool converged = false;
    bool failed_at_start = false;
};

double wrap_unit(double t) {
    double f = t - std::floor(t);
    if (f == 1.0) f = 0.0;
    return f;
}

std::vector<double> equispaced_params(int n, bool closed) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = closed ? double(i) / n : double(i) / (n - 1);
    return t;
}

/// Strictly ascending, and for open curves inside [0,1]. Closed curves use an
/// unwrapped window with all cyclic gaps positive.
bool feasible(const std::vector<double>& t, bool closed) {
    const int n = static_cast<int>(t.size());
    for (int i = 0; i + 1 < n; ++i)
        if (!(t[i + 1] > t[i])) return false;
    if (closed) return t[0] + 1.0 > t[n - 1];
    return t.front() >= 0.0 && t.back() <= 1.0;
}

std::vector<double> canonicalize(std::vector<double> t, bool closed) {
    if (closed) {
        for (double& v : t) v = wrap_unit(v);
    }
    std::sort(t.begin(), t.end());
    return t;
}

double energy_of(const KernelSpec& spec, const Curve& curve, const std::vector<double>& t) {
    return discrete_energy(spec, Configuration::make(curve, t));
}

/// Projected gradient: components pressed against an open-curve bound in the
/// blocked direction do not count toward the optimality measure.
double projected_sup_norm(const std::vector<double>& t, const std::vector<double>& g,
                          bool closed) {
    double sup = 0.0;
    for (size_t i = 0; i < t.size(); ++i) {
        double gi = g[i];
        if (!closed) {
            if (t[i] <= 0.0 && gi > 0.0) gi = 0.0;
            if (t[i] >= 1.0 && gi < 0.0) gi = 0.0;
        }
        sup = std::max(sup, std::fabs(gi));
    }
    return sup;
}

RunResult run_descent(const KernelSpec& spec, const Curve& curve, std::vector<double> t,
                      const OptimizeOptions& opts) {
    const bool closed = curve.closed();
    const int n = static_cast<int>(t.size());
    const double mean_gap = closed ? 1.0 / n : 1.0 / (n - 1);

    RunResult out;
    double energy = energy_of(spec, curve, t);
    double step_hint = 0.0;
    int iter = 0;

    for (; iter < opts.max_iterations; ++iter) {
        const Configuration cfg = Configuration::make(curve, t);
        t = cfg.params;  // canonical order
        const std::vector<double> grad = energy_gradient(spec, cfg);
        const double sup = projected_sup_norm(t, grad, closed);
        out.grad_sup = sup;
        if (sup <= opts.grad_tol) {
            out.converged = true;
            break;
        }

        double alpha = step_hint > 0.0 ? step_hint : 0.2 * mean_gap / sup;
        bool accepted = false;
        while (alpha >= kMinStep) {
            std::vector<double> cand(n);
            for (int i = 0; i < n; ++i) {
                double v = t[i] - alpha * grad[i];
                if (!closed) v = std::clamp(v, 0.0, 1.0);
                cand[i] = v;
            }
            if (!feasible(cand, closed)) {  // ordering barrier
                alpha *= kBacktrackFactor;
                continue;
            }
            // Sufficient decrease measured against the realized displacement.
            double gdot = 0.0;
            for (int i = 0; i < n; ++i) gdot += grad[i] * (t[i] - cand[i]);
            const double cand_energy = energy_of(spec, curve, cand);
            if (cand_energy <= energy - kArmijoDecrease * gdot && gdot > 0.0) {
                if (cand_energy > energy)
                    throw std::logic_error("minimize_energy: accepted step increased energy");
                t = canonicalize(std::move(cand), closed);
                energy = cand_energy;
                step_hint = 2.0 * alpha;
                accepted = true;
                break;
            }
            alpha *= kBacktrackFactor;
        }
        if (!accepted) {
            out.failed_at_start = (iter == 0);
            break;
        }
    }

    out.params = canonicalize(std::move(t), closed);
    out.energy = energy;
    out.iterations = iter;
    return out;
}

}  // namespace

void OptimizeOptions::validate() const {
    if (max_iterations <= 0) throw domain_error("OptimizeOptions: max_iterations must be positive");
    if (!(grad_tol > 0.0)) throw domain_error("OptimizeOptions: grad_tol must be positive");
    if (restarts <= 0) throw domain_error("OptimizeOptions: restarts must be positive");
    if (!(jitter >= 0.0 && jitter < 0.5))
        throw domain_error("OptimizeOptions: jitter must lie in [0, 0.5)");
}

MinimizeResult minimize_energy(const KernelSpec& spec, const Curve& curve, int n,
                               const OptimizeOptions& opts) {
    spec.validate();
    opts.validate();
    if (n < 2) throw domain_error("minimize_energy: needs n >= 2");

    const bool closed = curve.closed();
    const double mean_gap = closed ? 1.0 / n : 1.0 / (n - 1);

    std::optional<RunResult> best;
    int best_restart = -1;
    bool all_failed_at_start = true;

    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> t0 = equispaced_params(n, closed);
        if (r > 0 && opts.jitter > 0.0) {
            std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(r));
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (double& v : t0) {
                v += opts.jitter * mean_gap * u(rng);
                if (!closed) v = std::clamp(v, 0.0, 1.0);
            }
            t0 = canonicalize(std::move(t0), closed);
        }
        RunResult run = run_descent(spec, curve, t0, opts);
        if (!run.failed_at_start) all_failed_at_start = false;
        if (!best || run.energy < best->energy) {
            best = std::move(run);
            best_restart = r;
        }
    }
    (void)best_restart;

    if (all_failed_at_start)
        throw no_progress_error("minimize_energy: every restart failed line search at iteration 0");

    MinimizeResult result{Configuration::make(curve, best->params), EnergyReport{}};
    result.report.energy = best->energy;
    result.report.gradient_sup_norm = best->grad_sup;
    result.report.separation = separation_radius(result.config);
    result.report.iterations = best->iterations;
    result.report.restarts_used = opts.restarts;
    result.report.converged = best->converged;
    return result;
}

}  // namespace riesz
