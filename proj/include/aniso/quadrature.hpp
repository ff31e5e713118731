#pragma once

#include <functional>

namespace aniso {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature of f over [a,b].
/// Bisects intervals until the local K15-G7 error estimate meets the
/// tolerance apportioned by interval length. Integrand must be finite
/// on the closed interval; endpoint singularities have to be removed
/// by substitution before calling this.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-13, double rel_tol = 1e-13,
                     int max_depth = 48);

} // namespace aniso
