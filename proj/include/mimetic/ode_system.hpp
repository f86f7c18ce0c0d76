#pragma once

#include <cstdint>
#include <vector>

namespace mimetic {

/// Dense real n x m operator for the skew system f' = A g, g' = -A^T f.
/// A need not be square or invertible.
struct SkewOperator {
    long rows = 0;
    long cols = 0;
    std::vector<double> a;  ///< row-major, rows x cols

    SkewOperator() = default;
    SkewOperator(long rows_, long cols_);

    double& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    double at(long i, long j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    /// A g (length rows).  Throws std::invalid_argument on length mismatch.
    std::vector<double> apply(const std::vector<double>& g) const;
    /// A^T f (length cols).
    std::vector<double> apply_transpose(const std::vector<double>& f) const;

    /// Entries uniform in [-1, 1] from a fixed-seed generator.
    static SkewOperator seeded_random(long rows, long cols, std::uint64_t seed);
};

/// Staggered state: f at integer steps, g at half steps.
struct SkewState {
    std::vector<double> f;       ///< f^n
    std::vector<double> g_half;  ///< g^{n+1/2}
    long n_step = 0;
    double dt = 0.0;
};

/// Seed the half-step variable: g^{1/2} = g(0) - (dt/2) A^T f(0).
SkewState init_g_half(const std::vector<double>& f0, const std::vector<double>& g0,
                      const SkewOperator& op, double dt);

/// One leapfrog step: f^{n+1} = f^n + dt A g^{n+1/2}, then
/// g^{n+3/2} = g^{n+1/2} - dt A^T f^{n+1}, in that order.
/// Throws instability_error on a non-finite result.
SkewState leapfrog_step(const SkewState& s, const SkewOperator& op);

enum class SkewConserved {
    C_half,        ///< needs f, f_next, g_half
    C_n,           ///< needs f, g_prev_half, g_half
    C_continuous,  ///< needs f, g_prev_half, g_half
    E_energy,      ///< needs f_prev, f_next, g_prev_half, g_half
};

/// Trajectory values around step n; unused vectors may stay empty.
struct SkewWindow {
    std::vector<double> f_prev, f, f_next;
    std::vector<double> g_prev_half, g_half, g_next_half;
    double dt = 0.0;
};

/// Conserved quantities of the leapfrog scheme:
///   C_half = ||(f^{n+1}+f^n)/2||^2 + ||g||^2 - (dt^2/4) ||A g||^2
///   C_n    = ||f||^2 - (dt^2/4) ||A^T f||^2 + ||(g^{n+1/2}+g^{n-1/2})/2||^2
///   C_continuous = (||f||^2 + ||g at n||^2)/2
///   E_energy     = (||f'||^2 + ||g'||^2)/2, centered differences
double conserved(const SkewWindow& w, const SkewOperator& op, SkewConserved kind);

/// Spectral norm ||A|| by power iteration on A^T A, deterministic seed.
/// Returns 0 for the zero matrix.
double operator_norm(const SkewOperator& op, double tol);

enum class SkewSeries { f_series, g_series };

/// Residual of the implied second-order recursion along a trajectory:
///   ||(f^{n+1} - 2 f^n + f^{n-1})/dt^2 + A A^T f^n||   (f_series)
///   ||(g^{n+3/2} - 2 g^{n+1/2} + g^{n-1/2})/dt^2 + A^T A g^{n+1/2}||  (g_series)
double second_order_residual(const SkewWindow& w, const SkewOperator& op,
                             SkewSeries which = SkewSeries::f_series);

}  // namespace mimetic
