#pragma once

#include <vector>

namespace mimetic {

/// Space-time staggered 1D wave system u_t = c v_x, v_t = c u_x on a periodic
/// grid: u at integer sites and steps, v at half sites and half steps.
struct Wave1DState {
    std::vector<double> u;       ///< u^n_i
    std::vector<double> v_half;  ///< v^{n+1/2}_{i+1/2}
    long n_step = 0;
    double dt = 0.0;
    double dx = 0.0;
    double c = 0.0;
};

enum class Delta {
    to_half,  ///< delta(a)_{i+1/2} = a_{i+1} - a_i
    to_int,   ///< delta(c)_i = c_{i+1/2} - c_{i-1/2}
};

/// Periodic first difference between the two site families.
std::vector<double> delta(const std::vector<double>& values, Delta direction);

/// One leapfrog step: u^{n+1} = u^n + (c dt/dx) delta(v^{n+1/2}) at integer
/// sites, then v^{n+3/2} = v^{n+1/2} + (c dt/dx) delta(u^{n+1}) at half sites.
/// Throws instability_error on a non-finite result.
Wave1DState leapfrog_step(const Wave1DState& s);

enum class Wave1DConserved {
    C_n,     ///< needs u, v_prev_half, v_half
    C_half,  ///< needs u, u_next, v_half
};

/// Trajectory arrays around step n; unused vectors may stay empty.
struct Wave1DWindow {
    std::vector<double> u, u_next;
    std::vector<double> v_prev_half, v_half;
    double dt = 0.0;
    double dx = 0.0;
    double c = 0.0;
};

/// Conserved quantities (plain unweighted sums), with r = c dt/(2 dx):
///   C_n    = ||u||^2 - r^2 ||delta(u)||^2 + ||(v^{n+1/2}+v^{n-1/2})/2||^2
///   C_half = ||v||^2 - r^2 ||delta(v)||^2 + ||(u^{n+1}+u^n)/2||^2
double conserved(const Wave1DWindow& w, Wave1DConserved kind);

/// CFL bound dt_max = dx/c, from dt < (2/||delta||) dx/c with the
/// grid-independent bound ||delta|| <= 2.
double cfl_max(double dx, double c);

/// Power-iteration estimate of ||delta|| on a periodic grid of n sites.
/// Converges to 2 sin(pi floor(n/2) / n).
double delta_norm_estimate(long n, double tol);

}  // namespace mimetic
