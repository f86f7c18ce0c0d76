#pragma once

#include <vector>

namespace mimetic {

/// Periodic 1D transport in flux form. rho holds cell averages, vel the
/// edge velocities; edge i sits between cells i-1 and i.
struct TransportState {
    std::vector<double> rho;
    std::vector<double> vel;
    double dt = 0.0;
    double dx = 0.0;
    long n_step = 0;
};

/// Donor-cell flux update: edge i moves |v_i| dt/dx of the upwind cell's
/// density across, in the direction of v_i. Requires |v_i| dt/dx <= 1 at
/// every edge (throws std::invalid_argument otherwise); under that bound the
/// update keeps rho >= 0 exactly and at |v| dt/dx = 1 with uniform v it is a
/// bitwise circular shift.
TransportState transport_step(const TransportState& s);

/// Periodic 1D variable-coefficient diffusion. D holds the edge-sited
/// nonnegative coefficients.
struct DiffusionState {
    std::vector<double> rho;
    std::vector<double> D;
    double dt = 0.0;
    double dx = 0.0;
    long n_step = 0;
};

/// Forward-time centered-space update, evaluated in the grouped form
/// (1 - w) rho_c + r D_r rho_{c+1} + r D_l rho_{c-1} whose coefficients are
/// all nonnegative when w = (D_l + D_r) dt/dx^2 <= 1, so positivity is exact.
/// Throws std::invalid_argument when the bound fails at any cell.
DiffusionState diffusion_step(const DiffusionState& s);

/// dx times the sequential sum of rho.
double total_mass(const std::vector<double>& rho, double dx);

}  // namespace mimetic
