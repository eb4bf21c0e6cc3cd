#include "riesz/energy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace riesz {

namespace {

std::atomic<std::uint64_t> g_kernel_eval_count{0};

double wrap_unit(double t) {
    double f = t - std::floor(t);
    if (f == 1.0) f = 0.0;
    return f;
}

/// Runs fn(i) for i in [0, n) across a few worker threads. Each index is
/// independent; callers own any ordering of the combined results.
void for_each_index(int n, const std::function<void(int)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(std::min<unsigned>(hw, 4u), n);
    if (workers <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

Configuration Configuration::make(Curve curve, std::vector<double> params) {
    if (params.size() < 2) throw domain_error("Configuration: needs at least two parameters");
    const bool closed = curve.closed();
    for (double& t : params) {
        if (!std::isfinite(t)) throw domain_error("Configuration: non-finite parameter");
        if (closed) {
            t = wrap_unit(t);
        } else if (!(t >= 0.0 && t <= 1.0)) {
            throw domain_error("Configuration: parameter outside [0,1]");
        }
    }
    std::sort(params.begin(), params.end());
    Configuration cfg{std::move(curve), std::move(params), {}};
    cfg.points.reserve(cfg.params.size());
    for (double t : cfg.params) cfg.points.push_back(curve_point(cfg.curve, t));
    return cfg;
}

double discrete_energy(const KernelSpec& spec, const Configuration& config) {
    spec.validate();
    const int n = config.size();
    std::vector<double> row(n, 0.0);
    for_each_index(n, [&](int i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += kernel_eval(spec, config.points[i], config.points[j]);
            g_kernel_eval_count.fetch_add(1, std::memory_order_relaxed);
        }
        row[i] = acc;
    });
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += row[i];
    return total;
}

double discrete_potential(const KernelSpec& spec, const Configuration& config,
                          const HalfPlanePoint& z) {
    spec.validate();
    double acc = 0.0;
    for (const auto& p : config.points) acc += kernel_eval(spec, z, p);
    return acc / config.size();
}

namespace {

/// Interaction sum of the moving point i at trial parameter t against the
/// other (fixed) points; the i-dependent part of the energy is twice this.
double moving_point_sum(const KernelSpec& spec, const Configuration& config, int i, double t) {
    const HalfPlanePoint zi =
        curve_point(config.curve, config.curve.closed() ? wrap_unit(t) : t);
    double acc = 0.0;
    const int n = config.size();
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        acc += kernel_eval(spec, zi, config.points[j]);
    }
    return acc;
}

}  // namespace

std::vector<double> energy_gradient(const KernelSpec& spec, const Configuration& config) {
    spec.validate();
    const int n = config.size();
    const bool closed = config.curve.closed();
    const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    std::vector<double> grad(n, 0.0);

    for_each_index(n, [&](int i) {
        const double t = config.params[i];
        double h = h0 * std::max(1.0, std::fabs(t));

        // Gap to the neighboring parameters (cyclic for closed curves).
        double gap_up = std::numeric_limits<double>::infinity();
        double gap_dn = std::numeric_limits<double>::infinity();
        if (i + 1 < n) gap_up = config.params[i + 1] - t;
        else if (closed) gap_up = config.params[0] + 1.0 - t;
        if (i > 0) gap_dn = t - config.params[i - 1];
        else if (closed) gap_dn = t + 1.0 - config.params[n - 1];

        bool up_ok = gap_up > 2.0 * h;
        bool dn_ok = gap_dn > 2.0 * h;
        if (!closed) {
            up_ok = up_ok && (t + h <= 1.0);
            dn_ok = dn_ok && (t - h >= 0.0);
        }

        double d;
        if (up_ok && dn_ok) {
            d = (moving_point_sum(spec, config, i, t + h) -
                 moving_point_sum(spec, config, i, t - h)) /
                (2.0 * h);
        } else if (dn_ok) {
            d = (moving_point_sum(spec, config, i, t) -
                 moving_point_sum(spec, config, i, t - h)) /
                h;
        } else if (up_ok) {
            d = (moving_point_sum(spec, config, i, t + h) -
                 moving_point_sum(spec, config, i, t)) /
                h;
        } else {
            // Squeezed from both sides; shrink the stencil into the gap.
            const double hs = std::max(0.4 * std::min(gap_up, gap_dn), 1e-12);
            d = (moving_point_sum(spec, config, i, t + hs) -
                 moving_point_sum(spec, config, i, t - hs)) /
                (2.0 * hs);
        }
        grad[i] = 2.0 * d;
    });
    return grad;
}

double riesz_energy_3d(double s, std::span<const SurfacePoint3> points) {
    if (!(s > 0.0)) throw domain_error("riesz_energy_3d: requires s > 0");
    const size_t n = points.size();
    double acc = 0.0;
    for (size_t j = 0; j + 1 < n; ++j) {
        for (size_t k = j + 1; k < n; ++k) {
            const double dx = points[j].x - points[k].x;
            const double dy = points[j].y - points[k].y;
            const double dz = points[j].z - points[k].z;
            const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (d == 0.0) throw singularity_error("riesz_energy_3d: coincident points");
            acc += std::pow(d, -s);
        }
    }
    return 2.0 * acc;
}

double separation_radius(const Configuration& config) {
    const int n = config.size();
    if (n < 2) throw domain_error("separation_radius: needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            best = std::min(best, std::hypot(config.points[j].x - config.points[k].x,
                                             config.points[j].y - config.points[k].y));
        }
    }
    return best;
}

namespace detail {

std::uint64_t kernel_eval_count() { return g_kernel_eval_count.load(); }
void reset_kernel_eval_count() { g_kernel_eval_count.store(0); }

}  // namespace detail

}  // namespace riesz
