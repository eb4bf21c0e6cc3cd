#include "doctest.h"
#include "oracles.hpp"

#include "riesz/kernel.hpp"
#include "riesz/specfun.hpp"

#include <cmath>
#include <random>

using namespace riesz;

TEST_SUITE_BEGIN("kernel");

TEST_CASE("reflect is the axis mirror and an involution") {
    const HalfPlanePoint w{1.0, 0.0};
    CHECK(reflect(w).x == -1.0);
    CHECK(reflect(w).y == 0.0);
    const HalfPlanePoint axis{0.0, 2.0};
    CHECK(reflect(axis).x == 0.0);
    CHECK(reflect(axis).y == 2.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        const HalfPlanePoint p{u(rng), u(rng) - 2.5};
        const HalfPlanePoint q = reflect(reflect(p));
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
    }
}

TEST_CASE("Ks closed forms: axis pair and diagonal") {
    const KernelSpec ks = KernelSpec::ks(0.5);
    CHECK(kernel_eval(ks, {1, 0}, {0, 1}) ==
          doctest::Approx(oracles::kKsAxisValue).epsilon(1e-13));
    CHECK(kernel_eval(ks, {1, 0}, {1, 0}) ==
          doctest::Approx(oracles::kKsDiagHalf).epsilon(1e-13));
    CHECK(kernel_eval(ks, {1, 1}, {2, 0}) ==
          doctest::Approx(oracles::kKs_11_20).epsilon(1e-12));
    CHECK(kernel_eval(KernelSpec::ks(1.5), {1, 0.5}, {1.2, -0.3}) ==
          doctest::Approx(oracles::kKs_15_pair).epsilon(1e-12));
}

TEST_CASE("KsInf coefficient values and diagonal behavior") {
    for (const auto& row : oracles::kKsInfCoeffTable) {
        CHECK(ks_inf_coefficient(row.x) == doctest::Approx(row.value).epsilon(1e-12));
    }
    const KernelSpec kinf = KernelSpec::ks_inf(0.5);
    CHECK(kernel_eval(kinf, {1, 0}, {2, 0}) ==
          doctest::Approx(oracles::kKsInfHalf).epsilon(1e-12));
    // Continuous at the diagonal below s = 1, singular above.
    CHECK(kernel_eval(kinf, {1, 0}, {1, 0}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks_inf(3.0), {1, 0}, {1, 0}), singularity_error);
}

TEST_CASE("K0 and K1 special points") {
    CHECK(kernel_eval(KernelSpec::k0(), {0, 0}, {0, 2}) ==
          doctest::Approx(std::log(0.5)).epsilon(1e-14));
    // K1 reduces to the plain Riesz-1 kernel on the axis.
    CHECK(kernel_eval(KernelSpec::k1(), {0, 0}, {0, 2}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(kernel_eval(KernelSpec::k1(), {1, 0}, {1, 0}), singularity_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::k0(), {0, 1}, {0, 1}), singularity_error);
}

TEST_CASE("kernel symmetry is exact for all variants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(0.0, 3.0);
    std::uniform_real_distribution<double> uy(-2.0, 2.0);
    const KernelSpec specs[] = {KernelSpec::ks(0.35), KernelSpec::ks(1.6),
                                KernelSpec::ks_r(0.45, 10.0), KernelSpec::ks_inf(0.7),
                                KernelSpec::ks_inf(2.5), KernelSpec::k0(), KernelSpec::k1()};
    for (int i = 0; i < 60; ++i) {
        const HalfPlanePoint z{ux(rng), uy(rng)};
        const HalfPlanePoint w{ux(rng), uy(rng)};
        if (std::hypot(z.x - w.x, z.y - w.y) < 1e-6) continue;
        for (const auto& spec : specs) {
            CHECK(kernel_eval(spec, z, w) == kernel_eval(spec, w, z));
        }
    }
}

TEST_CASE("Ks homogeneity under rescaling") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(0.05, 2.5);
    std::uniform_real_distribution<double> uy(-1.5, 1.5);
    std::uniform_real_distribution<double> us(0.1, 1.9);
    std::uniform_real_distribution<double> ur(0.3, 4.0);
    for (int i = 0; i < 100; ++i) {
        double s = us(rng);
        if (std::fabs(s - 1.0) < 0.02) s = 0.5;
        const double r = ur(rng);
        const HalfPlanePoint z{ux(rng), uy(rng)};
        const HalfPlanePoint w{ux(rng), uy(rng)};
        if (std::hypot(z.x - w.x, z.y - w.y) < 1e-3) continue;
        const KernelSpec ks = KernelSpec::ks(s);
        const double lhs = kernel_eval(ks, {r * z.x, r * z.y}, {r * w.x, r * w.y});
        const double rhs = std::pow(r, -s) * kernel_eval(ks, z, w);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(rhs));
    }
}

TEST_CASE("quadrature oracle: closed forms and agreement with kernel_eval") {
    CHECK(kernel_quadrature(0.5, {1, 0}, {0, 1}, 256) ==
          doctest::Approx(oracles::kKsAxisValue).epsilon(1e-12));
    CHECK(kernel_quadrature(0.5, {1, 1}, {2, 0}, 512) ==
          doctest::Approx(kernel_eval(KernelSpec::ks(0.5), {1, 1}, {2, 0})).epsilon(1e-10));
    CHECK(kernel_quadrature(1.0, {1, 0}, {1, 1}, 1024) ==
          doctest::Approx(kernel_eval(KernelSpec::k1(), {1, 0}, {1, 1})).epsilon(1e-9));

    // Randomized agreement across the potential and singular ranges.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(0.1, 3.0);
    std::uniform_real_distribution<double> uy(-2.0, 2.0);
    std::uniform_real_distribution<double> us(0.05, 1.95);
    int checked = 0;
    while (checked < 50) {
        double s = us(rng);
        if (std::fabs(s - 1.0) < 0.02) continue;
        const HalfPlanePoint z{ux(rng), uy(rng)};
        const HalfPlanePoint w{ux(rng), uy(rng)};
        if (std::hypot(z.x - w.x, z.y - w.y) < 0.05) continue;
        const double quad = kernel_quadrature(s, z, w, 1024);
        const double eval = kernel_eval(KernelSpec::ks(s), z, w);
        CHECK(std::fabs(eval - quad) <= 1e-10 * std::fabs(quad));
        ++checked;
    }

    CHECK_THROWS_AS(kernel_quadrature(1.5, {1, 0}, {1, 0}, 256), singularity_error);
    CHECK_THROWS_AS(kernel_quadrature(0.5, {1, 0}, {0, 1}, 255), domain_error);
    CHECK_THROWS_AS(kernel_quadrature(0.5, {1, 0}, {0, 1}, 8), domain_error);
}

TEST_CASE("i_s_circle both gamma forms and limits") {
    for (const auto& row : oracles::kCircleEnergyTable) {
        CHECK(i_s_circle(row.x) == doctest::Approx(row.value).epsilon(1e-12));
    }
    CHECK(i_s_circle(1e-8) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(i_s_circle(0.0), domain_error);
    CHECK_THROWS_AS(i_s_circle(1.0), domain_error);
}

TEST_CASE("monotonicity along vertical and horizontal lines") {
    const KernelSpec ks = KernelSpec::ks(0.6);
    double prev = kernel_eval(ks, {1.0, 0.05}, {1.0, 0.0});
    for (double t = 0.15; t <= 2.0; t += 0.1) {
        const double cur = kernel_eval(ks, {1.0, t}, {1.0, 0.0});
        CHECK(cur < prev);
        prev = cur;
    }
    prev = kernel_eval(ks, {1.05, 0.3}, {1.0, 0.3});
    for (double t = 0.15; t <= 2.0; t += 0.1) {
        const double cur = kernel_eval(ks, {1.0 + t, 0.3}, {1.0, 0.3});
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("global maximum of Ks(., w) sits at the grid point nearest w") {
    const KernelSpec ks = KernelSpec::ks(0.5);
    const HalfPlanePoint w{1.013, 0.271};
    const double x0 = 0.2, x1 = 1.8, y0 = -0.6, y1 = 1.2;
    int besti = -1, bestj = -1;
    double best = -1e300;
    for (int i = 0; i < 101; ++i) {
        for (int j = 0; j < 101; ++j) {
            const HalfPlanePoint z{x0 + (x1 - x0) * i / 100.0, y0 + (y1 - y0) * j / 100.0};
            const double v = kernel_eval(ks, z, w);
            if (v > best) {
                best = v;
                besti = i;
                bestj = j;
            }
        }
    }
    const int wanti = static_cast<int>(std::lround((w.x - x0) / (x1 - x0) * 100.0));
    const int wantj = static_cast<int>(std::lround((w.y - y0) / (y1 - y0) * 100.0));
    CHECK(besti == wanti);
    CHECK(bestj == wantj);
}

TEST_CASE("logarithmic limit of Ks recovers K0") {
    const HalfPlanePoint z{0.8, 0.4}, w{1.3, -0.2};
    const double k0 = kernel_eval(KernelSpec::k0(), z, w);
    auto f = [&](double s) { return (kernel_eval(KernelSpec::ks(s), z, w) - 1.0) / s; };
    // First-order Richardson in s on the 1e-3 .. 1e-5 ladder.
    const double r1 = (10.0 * f(1e-4) - f(1e-3)) / 9.0;
    const double r2 = (10.0 * f(1e-5) - f(1e-4)) / 9.0;
    CHECK(std::fabs(r1 - k0) <= 1e-6);
    CHECK(std::fabs(r2 - k0) <= 1e-6);
}

TEST_CASE("elliptic limit of Ks at s -> 1") {
    const HalfPlanePoint z{0.9, 0.1}, w{1.4, 0.6};
    const double k1 = kernel_eval(KernelSpec::k1(), z, w);
    const double ks = kernel_eval(KernelSpec::ks(1.0 - 1e-6), z, w);
    CHECK(std::fabs(ks - k1) <= 1e-5 * std::fabs(k1));
    // s = 1 exactly routes through the elliptic form.
    CHECK(kernel_eval(KernelSpec::ks(1.0), z, w) == doctest::Approx(k1).epsilon(1e-14));
}

TEST_CASE("diagonal limit of Ks for s < 1") {
    const double s = 0.5;
    const KernelSpec ks = KernelSpec::ks(s);
    const HalfPlanePoint w{1.2, 0.4};
    const double diag = i_s_circle(s) * std::pow(w.x, -s);
    const double dirs[][2] = {{1, 0}, {0, 1}, {-0.6, 0.8}, {0.7, -0.7}};
    for (const auto& d : dirs) {
        double prev_gap = 1e300;
        for (double eps = 1e-2; eps >= 1e-6; eps *= 0.1) {
            const HalfPlanePoint z{w.x + eps * d[0], w.y + eps * d[1]};
            const double gap = std::fabs(kernel_eval(ks, z, w) - diag);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap <= 5e-3);
    }
}

TEST_CASE("KsR definition and its large-R limit") {
    const HalfPlanePoint z{0.3, 0.4}, w{0.8, -0.2};
    // s > 1: plain rescaling of the translated kernel.
    const double s1 = 1.5, R = 50.0;
    CHECK(kernel_eval(KernelSpec::ks_r(s1, R), z, w) ==
          doctest::Approx(2.0 * R *
                          kernel_eval(KernelSpec::ks(s1), {R + z.x, z.y}, {R + w.x, w.y}))
              .epsilon(1e-13));
    // 0 < s < 1: the limit kernel emerges as R grows.
    const double s0 = 0.5;
    const double target = kernel_eval(KernelSpec::ks_inf(s0), z, w);
    double prev = 1e300;
    for (double Rv : {1e2, 1e3, 1e4}) {
        const double gap = std::fabs(kernel_eval(KernelSpec::ks_r(s0, Rv), z, w) - target);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev <= 1e-3);
}

TEST_CASE("expansion terms of the large-R asymptotics") {
    const double s = 0.5, R = 100.0;
    const HalfPlanePoint z{0.3, 0.4}, w{0.8, -0.2};
    const ExpansionTerms terms = expansion_terms(s, z, w, R);
    CHECK(terms.leading ==
          doctest::Approx(i_s_circle(s) * std::pow(R, -s)).epsilon(1e-14));
    CHECK(terms.leading == doctest::Approx(0.1180340599016096).epsilon(1e-12));
    CHECK(terms.leading > 0.0);

    // Drift term vanishes exactly for axis points.
    const ExpansionTerms axis = expansion_terms(s, {0, 0}, {0, 3}, 10.0);
    CHECK(axis.drift_term == 0.0);

    // The 2R-scaled residual decays at first order in 1/R.
    auto resid = [&](double Rv) {
        const ExpansionTerms t = expansion_terms(s, z, w, Rv);
        const double full = kernel_eval(KernelSpec::ks(s), {Rv + z.x, z.y}, {Rv + w.x, w.y});
        return 2.0 * Rv * std::fabs(full - t.sum());
    };
    const double ratio = resid(200.0) / resid(100.0);
    CHECK(ratio > 0.4);
    CHECK(ratio < 0.6);

    CHECK_THROWS_AS(expansion_terms(1.5, z, w, R), domain_error);
    CHECK_THROWS_AS(expansion_terms(0.5, z, w, 0.5), domain_error);
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks(0.0), {1, 0}, {2, 0}), domain_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks(-0.5), {1, 0}, {2, 0}), domain_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks_r(0.5, 0.0), {1, 0}, {2, 0}), domain_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks_r(1.0, 5.0), {1, 0}, {2, 0}),
                    unsupported_parameter_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks_inf(1.0), {1, 0}, {2, 0}), domain_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks(0.5), {-1, 0}, {2, 0}), domain_error);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::ks(1.5), {1, 0}, {1, 0}), singularity_error);
}

TEST_SUITE_END();
