#include "doctest.h"
#include "oracles.hpp"

#include "riesz/energy.hpp"
#include "riesz/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace riesz;

TEST_SUITE_BEGIN("energy");

namespace {

Configuration two_points(const HalfPlanePoint& a, const HalfPlanePoint& b) {
    return Configuration::make(Curve::segment(a, b), {0.0, 1.0});
}

Configuration equispaced_circle(int n, const HalfPlanePoint& center = {1.5, 0},
                                double radius = 1.0) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = double(i) / n;
    return Configuration::make(Curve::circle(center, radius), std::move(t));
}

}  // namespace

TEST_CASE("discrete_energy closed-form pairs") {
    CHECK(discrete_energy(KernelSpec::ks_inf(0.5), two_points({1, 0}, {2, 0})) ==
          doctest::Approx(2.0 * oracles::kKsInfHalf).epsilon(1e-12));
    CHECK(discrete_energy(KernelSpec::k0(), two_points({0, 0}, {0, 2})) ==
          doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("three equispaced points on a circle match the quadrature-oracle sum") {
    const Configuration cfg = equispaced_circle(3);
    const double energy = discrete_energy(KernelSpec::ks(0.5), cfg);
    double oracle = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (j != k) oracle += kernel_quadrature(0.5, cfg.points[j], cfg.points[k], 512);
    CHECK(energy == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(energy == doctest::Approx(3.8238981737211338).epsilon(1e-9));
}

TEST_CASE("energy invariant under parameter permutation after canonical sorting") {
    const Curve c = Curve::segment({1, 0}, {3, 1});
    std::vector<double> t = {0.9, 0.1, 0.5, 0.3, 0.7};
    const double e1 = discrete_energy(KernelSpec::ks(0.5), Configuration::make(c, t));
    std::reverse(t.begin(), t.end());
    const double e2 = discrete_energy(KernelSpec::ks(0.5), Configuration::make(c, t));
    CHECK(e1 == e2);  // bit-for-bit
}

TEST_CASE("scaling the whole geometry rescales the Ks energy") {
    const double s = 0.6, r = 2.7;
    std::vector<double> t = {0.05, 0.3, 0.55, 0.8, 1.0};
    const double e1 = discrete_energy(KernelSpec::ks(s),
                                      Configuration::make(Curve::segment({1, -1}, {2, 1}), t));
    const double e2 = discrete_energy(
        KernelSpec::ks(s), Configuration::make(Curve::segment({r, -r}, {2 * r, r}), t));
    CHECK(std::fabs(e2 - std::pow(r, -s) * e1) <= 1e-11 * std::fabs(e1));
}

TEST_CASE("pair-sum identity and the quadratic evaluation count") {
    const Configuration cfg = equispaced_circle(17);
    const KernelSpec spec = KernelSpec::ks(0.5);
    detail::reset_kernel_eval_count();
    const double full = discrete_energy(spec, cfg);
    CHECK(detail::kernel_eval_count() == 17ull * 16ull);
    double half = 0.0;
    for (int j = 0; j < 17; ++j)
        for (int k = j + 1; k < 17; ++k) half += kernel_eval(spec, cfg.points[j], cfg.points[k]);
    CHECK(std::fabs(full - 2.0 * half) <= 1e-13 * std::fabs(full));
}

TEST_CASE("discrete_energy refuses coincident points under a singular kernel") {
    const Curve c = Curve::segment({1, 0}, {3, 0});
    const Configuration cfg = Configuration::make(c, {0.5, 0.5});
    CHECK_THROWS_AS(discrete_energy(KernelSpec::k1(), cfg), singularity_error);
    CHECK_THROWS_AS(discrete_energy(KernelSpec::ks(1.5), cfg), singularity_error);
    // Non-singular kernels accept them.
    CHECK(std::isfinite(discrete_energy(KernelSpec::k0(), cfg)));
}

TEST_CASE("discrete_potential basics") {
    // Two-point mean.
    const Configuration cfg = two_points({1, 0}, {2, 0});
    const KernelSpec spec = KernelSpec::ks_inf(0.5);
    const HalfPlanePoint z{1.5, 0.7};
    const double want =
        0.5 * (kernel_eval(spec, z, cfg.points[0]) + kernel_eval(spec, z, cfg.points[1]));
    CHECK(discrete_potential(spec, cfg, z) == doctest::Approx(want).epsilon(1e-15));

    // Reflection symmetry of the uniform circle configuration.
    const Configuration circ = equispaced_circle(8);
    const double up = discrete_potential(spec, circ, {1.9, 0.55});
    const double dn = discrete_potential(spec, circ, {1.9, -0.55});
    CHECK(up == doctest::Approx(dn).epsilon(1e-13));
}

TEST_CASE("gradient vanishes at symmetric critical points") {
    const Configuration antipodal =
        Configuration::make(Curve::circle({1.5, 0}, 1.0), {0.0, 0.5});
    const std::vector<double> g = energy_gradient(KernelSpec::ks_inf(0.5), antipodal);
    CHECK(std::fabs(g[0]) <= 1e-7);
    CHECK(std::fabs(g[1]) <= 1e-7);

    for (const KernelSpec spec : {KernelSpec::ks_inf(0.5), KernelSpec::ks_inf(2.5)}) {
        const Configuration circ = equispaced_circle(12);
        const std::vector<double> gc = energy_gradient(spec, circ);
        for (double gi : gc) CHECK(std::fabs(gi - gc[0]) <= 1e-7 * std::max(1.0, std::fabs(gc[0])));
    }
}

TEST_CASE("gradient agrees with a five-point-stencil oracle") {
    const Curve c = Curve::segment({1, 0}, {3, 1});
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> t = {u(rng), u(rng), u(rng), u(rng), u(rng)};
    std::sort(t.begin(), t.end());
    const Configuration cfg = Configuration::make(c, t);
    const KernelSpec spec = KernelSpec::ks_inf(0.5);
    const std::vector<double> g = energy_gradient(spec, cfg);
    for (int i = 0; i < 5; ++i) {
        auto energy_at = [&](double ti) {
            std::vector<double> tt = cfg.params;
            tt[i] = ti;
            return discrete_energy(spec, Configuration::make(c, tt));
        };
        const double want = oracles::stencil_derivative(energy_at, cfg.params[i], 1e-4);
        CHECK(std::fabs(g[i] - want) <= 1e-5 * std::max(1.0, std::fabs(want)));
    }
}

TEST_CASE("riesz_energy_3d closed forms") {
    const std::vector<SurfacePoint3> antipodal = {{1, 0, 0}, {-1, 0, 0}};
    CHECK(riesz_energy_3d(1.0, antipodal) == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<SurfacePoint3> tri;
    for (int k = 0; k < 3; ++k)
        tri.push_back({std::cos(2.0 * M_PI * k / 3), std::sin(2.0 * M_PI * k / 3), 0.0});
    CHECK(riesz_energy_3d(2.0, tri) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_AS(riesz_energy_3d(1.0, std::vector<SurfacePoint3>{{1, 0, 0}, {1, 0, 0}}),
                    singularity_error);
}

TEST_CASE("ring-discretized 3d energy is consistent with the reduced energy") {
    const double s = 0.5;
    const int M = 512;
    const Configuration cfg = equispaced_circle(4);
    std::vector<SurfacePoint3> cloud;
    cloud.reserve(4 * M);
    for (const auto& z : cfg.points)
        for (int m = 0; m < M; ++m) cloud.push_back(lift_to_3d(z, 2.0 * M_PI * m / M));

    const double full3d = riesz_energy_3d(s, cloud);
    // Ordered same-ring interactions, rotation-invariant per ring.
    double ring_self = 0.0;
    for (const auto& z : cfg.points) {
        double one = 0.0;
        for (int k = 1; k < M; ++k)
            one += std::pow(2.0 * z.x * std::sin(M_PI * k / M), -s);
        ring_self += double(M) * one;
    }
    const double cross = (full3d - ring_self) / (double(M) * M);
    const double reduced = discrete_energy(KernelSpec::ks(s), cfg);
    CHECK(std::fabs(cross - reduced) <= 1e-6 * std::fabs(reduced));
}

TEST_CASE("separation radius closed forms") {
    CHECK(separation_radius(two_points({1, 0}, {1, 1})) == doctest::Approx(1.0));
    const int n = 12;
    const double r = 1.0;
    CHECK(separation_radius(equispaced_circle(n)) ==
          doctest::Approx(2.0 * r * std::sin(M_PI / n)).epsilon(1e-13));
    CHECK(separation_radius(equispaced_circle(2)) == doctest::Approx(2.0 * r).epsilon(1e-13));
}

TEST_CASE("potential is flat on the support of an optimized segment run") {
    OptimizeOptions opts;
    opts.restarts = 2;
    opts.max_iterations = 4000;
    opts.grad_tol = 1e-10;
    opts.seed = 5;
    const KernelSpec spec = KernelSpec::ks_inf(0.5);
    const MinimizeResult res = minimize_energy(spec, Curve::segment({1, 0}, {3, 0}), 64, opts);
    double lo = 1e300, hi = -1e300, mean = 0.0;
    for (const auto& z : res.config.points) {
        const double w = discrete_potential(spec, res.config, z);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
        mean += w;
    }
    mean /= res.config.size();
    CHECK(hi - lo <= 1e-3 * std::fabs(mean));
}

TEST_SUITE_END();
