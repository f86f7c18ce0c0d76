#pragma once

#include <utility>

#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"

namespace mimetic {

/// Staggered-time electromagnetic state: E on primal edges at integer steps,
/// H on dual edges (primal faces) at half steps. eps is an edge-sited
/// positive lattice acting like the A star map, mu a face-sited one acting
/// like B. The divergence lattices captured at init back the constancy
/// diagnostics.
struct MaxwellState {
    Field3 E;
    Field3 H_half;
    Field3 eps;
    Field3 mu;
    long n_step = 0;
    double dt = 0.0;
    Field3 div_e0;
    Field3 div_h0;
};

/// Wraps the two electromagnetic coefficient lattices as a Material with
/// unit node and cell weights, for the shared operator and inner-product
/// routines.
Material maxwell_material(const Field3& eps, const Field3& mu);

/// H^{1/2} = H0 - (dt/2) mu^-1 R E0; also records the initial divergences
/// of eps E and mu H.
MaxwellState init_h_half(const Field3& E0, const Field3& H0, const Field3& eps,
                         const Field3& mu, double dt);

/// E^{n+1} = E^n + dt eps^-1 R* H^{n+1/2};
/// H^{n+3/2} = H^{n+1/2} - dt mu^-1 R E^{n+1}.
/// Throws instability_error when a non-finite value appears.
MaxwellState leapfrog_step(const MaxwellState& s);

enum class MaxwellConserved { C_half, C_n };

/// Trajectory fragment around one step; fields not needed by the requested
/// quantity may be left empty.
struct MaxwellWindow {
    Field3 E;
    Field3 E_next;
    Field3 H_prev_half;
    Field3 H_half;
    Field3 eps;
    Field3 mu;
    double dt = 0.0;
};

/// Corrected invariants in the eps-weighted edge and mu-weighted dual-edge
/// norms:
///   C_half = |avg(E_next,E)|^2 + |H|^2 - (dt^2/4) |eps^-1 R* H|^2
///   C_n    = |E|^2 - (dt^2/4) |mu^-1 R E|^2 + |avg(H, H_prev)|^2
double conserved(const MaxwellWindow& w, MaxwellConserved kind);

/// Max-norm drifts (|div(eps E) - initial|_inf, |div(mu H) - initial|_inf).
/// Both divergences are constant in time to rounding because the divergence
/// of a curl vanishes identically.
std::pair<double, double> divergence_diagnostics(const MaxwellState& s);

/// Largest stable step 2 / sqrt(|eps^-1 R* mu^-1 R|), via power iteration.
double cfl_estimate(const Field3& eps, const Field3& mu, const GridSpec3& grid,
                    double tol);

}  // namespace mimetic
