#pragma once

#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"

namespace mimetic {

/// Staggered-time state of the scalar wave system u' = div-like(v),
/// v' = grad-like(u): u lives on integer steps, v on half steps.
///
/// The primal scheme keeps u on node scalars and v on the dual face vectors;
/// the starred mirror (selected by init from the kinds of the initial data)
/// keeps u on dual node scalars and v on primal face vectors and swaps each
/// operator for its dual.
struct ScalarWaveState {
    Field3 u;
    Field3 v_half;
    Material mat;
    long n_step = 0;
    double dt = 0.0;
    bool starred = false;
};

/// Builds the half-step v: v^{1/2} = v0 + (dt/2) * grad-chain(u0).
/// u0 of kind NodeScalar selects the primal scheme, DualNodeScalar the
/// starred one; v0 must be the matching velocity kind.
ScalarWaveState init_v_half(const Field3& u0, const Field3& v0,
                            const Material& mat, double dt);

/// u^{n+1} = u^n + dt * div-chain(v^{n+1/2});
/// v^{n+3/2} = v^{n+1/2} + dt * grad-chain(u^{n+1}).
/// Throws instability_error when a non-finite value appears.
ScalarWaveState leapfrog_step(const ScalarWaveState& s);

enum class WaveConserved { C_half, C_n };

/// Trajectory fragment around one step; fields not needed by the requested
/// quantity may be left empty.
struct ScalarWaveWindow {
    Field3 u;
    Field3 u_next;
    Field3 v_prev_half;
    Field3 v_half;
    Material mat;
    double dt = 0.0;
};

/// The two corrected quadratic invariants, in the scheme's weighted norms:
///   C_half = |avg(u_next,u)|^2 + |v|^2 - (dt^2/4) |div-chain(v)|^2
///   C_n    = |u|^2 - (dt^2/4) |grad-chain(u)|^2 + |avg(v, v_prev)|^2
double conserved(const ScalarWaveWindow& w, WaveConserved kind);

/// Max-norm of the curl of the transported velocity (R of A^-1 v for the
/// primal scheme, R* of B^-1 v for the starred one). Stays at rounding level
/// along trajectories started from v0 = 0.
double curl_diagnostic(const ScalarWaveState& s);

/// Largest stable step 2 / sqrt(|second-order composite|), via power
/// iteration with the given relative tolerance.
double dt_max_estimate(const GridSpec3& grid, const Material& mat, bool starred,
                       double tol);

}  // namespace mimetic
