#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace mimetic {

/// Dominant eigenvalue magnitude of a self-adjoint operator by power
/// iteration: x <- Op(x)/||Op(x)|| with the Rayleigh quotient as the
/// estimate.  `dot` must be the inner product Op is self-adjoint in and
/// `scale` must perform x *= c in place.
///
/// Rayleigh-quotient convergence is geometric with an unknown ratio, so the
/// stopping rule projects the remaining error from the ratio of successive
/// changes (Aitken style) and stops once the projection drops below
/// tol * |estimate|.  Returns 0 for an operator that annihilates the start
/// vector.
template <class Vec, class Op, class Dot, class Scale>
double power_iteration(Op&& op, Dot&& dot, Scale&& scale, Vec x, double tol,
                       long max_iter = 500000) {
    if (!(tol > 0.0)) throw std::invalid_argument("power_iteration: tol must be > 0");
    const double nrm0 = std::sqrt(dot(x, x));
    if (nrm0 == 0.0) throw std::invalid_argument("power_iteration: start vector is zero");
    scale(x, 1.0 / nrm0);

    double lambda = 0.0;
    double prev_change = std::numeric_limits<double>::infinity();
    for (long it = 0; it < max_iter; ++it) {
        Vec y = op(x);
        const double rayleigh = dot(x, y);
        const double ynorm2 = dot(y, y);
        if (ynorm2 == 0.0) return 0.0;
        const double change = std::abs(rayleigh - lambda);
        lambda = rayleigh;
        scale(y, 1.0 / std::sqrt(ynorm2));
        x = std::move(y);

        if (it >= 10) {
            if (change == 0.0) break;
            double ratio = change / prev_change;
            if (ratio > 0.999) ratio = 0.999;
            const double projected = change * ratio / (1.0 - ratio);
            if (projected <= tol * std::abs(lambda) && change <= tol * std::abs(lambda)) break;
        }
        prev_change = change;
    }
    return std::abs(lambda);
}

}  // namespace mimetic
