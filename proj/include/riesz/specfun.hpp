#pragma once

#include "riesz/errors.hpp"

namespace riesz::specfun {

/// Accuracy knobs for series evaluations.
struct FunctionAccuracy {
    double rel_tol = 1e-14;  ///< target relative error, must lie in (0, 1e-8]
    int max_terms = 800;     ///< series length cap, must be >= 50

    void validate() const;
};

/// ln Gamma(x) for x > 0. Relative error on Gamma(x) below 1e-13.
double ln_gamma(double x);

/// Gamma(x) for any real x that is not a pole (x = 0, -1, -2, ...).
/// Negative non-integer arguments go through the reflection formula.
double gamma(double x);

/// Gauss hypergeometric function 2F1(a,b;c;z) for z in [0,1].
///
/// Direct series for z <= 1/2; the 1-z connection formula otherwise, so
/// accuracy does not collapse as z -> 1. Terminating series (a or b a
/// non-positive integer) are summed exactly for any z. At z = 1 the Gauss
/// summation formula applies and requires c-a-b > 0.
///
/// Throws unsupported_parameter_error when the connection formula would be
/// evaluated with c-a-b within 1e-8 of an integer, and nonconvergence_error
/// when a series exceeds acc.max_terms.
double gauss_2f1(double a, double b, double c, double z,
                 const FunctionAccuracy& acc = FunctionAccuracy{});

/// Complete elliptic integral of the first kind, parameter convention:
/// K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt, 0 <= m < 1.
/// Computed by arithmetic-geometric mean iteration.
double elliptic_k(double m);

/// Riemann zeta function for real s > 1 (accelerated alternating series).
double riemann_zeta(double s);

}  // namespace riesz::specfun
