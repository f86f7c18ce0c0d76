#pragma once

#include <limits>
#include <vector>

namespace mimetic {

/// Harmonic oscillator u' = omega v, v' = -omega u in staggered (leapfrog)
/// form: u lives at integer steps, v at half steps.
struct OscState {
    double u = 0.0;       ///< u^n
    double v_half = 0.0;  ///< v^{n+1/2}
    long n = 0;
    double dt = 0.0;
    double omega = 0.0;
};

/// Direct second-order discretization of u'' + omega^2 u = 0.
struct OscSecondOrderState {
    double u_prev = 0.0;  ///< u^{n-1}
    double u_curr = 0.0;  ///< u^n
    long n = 0;
    double dt = 0.0;
    double omega = 0.0;
};

/// Crank-Nicolson pair for u' = -omega v, v' = omega u, collocated in time.
struct CNState {
    double u = 0.0;
    double v = 0.0;
    long n = 0;
    double dt = 0.0;
    double omega = 0.0;
};

/// Seed a staggered state from u(0) and u'(0): v^{1/2} = u'(0)/omega.
/// Throws std::invalid_argument unless omega > 0 and dt > 0.
OscState init_half(double u0, double du0, double omega, double dt);

/// One leapfrog step: u^{n+1} = u^n + dt omega v^{n+1/2}, then
/// v^{n+3/2} = v^{n+1/2} - dt omega u^{n+1}, in that order.
/// Throws instability_error on a non-finite result.
OscState leapfrog_step(const OscState& s);

/// Run u^{n+1} = (2 - (omega dt)^2) u^n - u^{n-1} from the seed pair
/// (u0, u1).  Returns u^0 .. u^{n_steps} (n_steps >= 0).
/// Throws instability_error on a non-finite result.
std::vector<double> second_order_run(double u0, double u1, double omega, double dt,
                                     long n_steps);

/// One Crank-Nicolson step: solves
///   u_{n+1} + (dt omega/2) v_{n+1} = u_n - (dt omega/2) v_n
///   v_{n+1} - (dt omega/2) u_{n+1} = v_n + (dt omega/2) u_n
/// by the closed-form 2x2 inverse.  The solve runs in extended precision so
/// the discrete energy (u^2+v^2)/2 carries no systematic per-step bias.
CNState crank_nicolson_step(const CNState& s);

enum class OscConserved {
    C_n,            ///< needs u, v_prev_half, v_half
    C_half,         ///< needs u, u_next, v_half
    C_secondorder,  ///< needs u_prev, u, u_next
    E_classical,    ///< needs u_prev, u, u_next
};

/// Values around one step of a trajectory.  Fields a given conserved kind
/// does not use may stay NaN.
struct OscWindow {
    double u_prev = std::numeric_limits<double>::quiet_NaN();  ///< u^{n-1}
    double u = std::numeric_limits<double>::quiet_NaN();       ///< u^n
    double u_next = std::numeric_limits<double>::quiet_NaN();  ///< u^{n+1}
    double v_prev_half = std::numeric_limits<double>::quiet_NaN();  ///< v^{n-1/2}
    double v_half = std::numeric_limits<double>::quiet_NaN();       ///< v^{n+1/2}
    double dt = 0.0;
    double omega = 0.0;
};

/// Conserved quantities of the staggered schemes, with alpha = omega dt/2:
///   C_n      = 1/2 [ (1-alpha^2) u^2 + ((v^{n+1/2}+v^{n-1/2})/2)^2 ]
///   C_half   = 1/2 [ ((u^{n+1}+u^n)/2)^2 + (1-alpha^2) v^2 ]
///   C_so     = (1-alpha^2) u^2 + ((u^{n+1}-u^{n-1})/(2 omega dt))^2
///   E_class  = ((u^{n+1}-u^{n-1})/(2 dt))^2/2 + (omega u)^2/2
/// Throws std::invalid_argument when the window lacks a needed value.
double conserved(const OscWindow& w, OscConserved kind);

}  // namespace mimetic
