#include "mimetic/oscillator.hpp"

#include <cmath>
#include <stdexcept>

#include "mimetic/errors.hpp"

namespace mimetic {

namespace {

double need(double x, const char* name) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string("oscillator window lacks ") + name);
    return x;
}

}  // namespace

OscState init_half(double u0, double du0, double omega, double dt) {
    if (!(omega > 0.0)) throw std::invalid_argument("init_half: omega must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("init_half: dt must be > 0");
    return OscState{u0, du0 / omega, 0, dt, omega};
}

OscState leapfrog_step(const OscState& s) {
    OscState out = s;
    out.u = s.u + s.dt * (s.omega * s.v_half);
    out.v_half = s.v_half - s.dt * (s.omega * out.u);
    out.n = s.n + 1;
    if (!std::isfinite(out.u) || !std::isfinite(out.v_half))
        throw instability_error("oscillator leapfrog produced a non-finite value", out.n);
    return out;
}

std::vector<double> second_order_run(double u0, double u1, double omega, double dt,
                                     long n_steps) {
    if (n_steps < 0) throw std::invalid_argument("second_order_run: n_steps must be >= 0");
    std::vector<double> u;
    u.reserve(static_cast<std::size_t>(n_steps) + 1);
    u.push_back(u0);
    if (n_steps == 0) return u;
    u.push_back(u1);
    const double h = omega * dt;
    const double coeff = 2.0 - h * h;
    for (long n = 2; n <= n_steps; ++n) {
        double next = coeff * u[static_cast<std::size_t>(n - 1)] -
                      u[static_cast<std::size_t>(n - 2)];
        if (!std::isfinite(next))
            throw instability_error("second-order oscillator recursion overflowed", n);
        u.push_back(next);
    }
    return u;
}

CNState crank_nicolson_step(const CNState& s) {
    const long double b = 0.5L * static_cast<long double>(s.dt) * static_cast<long double>(s.omega);
    const long double det = 1.0L + b * b;
    const long double ru = static_cast<long double>(s.u) - b * static_cast<long double>(s.v);
    const long double rv = b * static_cast<long double>(s.u) + static_cast<long double>(s.v);
    CNState out = s;
    out.u = static_cast<double>((ru - b * rv) / det);
    out.v = static_cast<double>((b * ru + rv) / det);
    out.n = s.n + 1;
    return out;
}

double conserved(const OscWindow& w, OscConserved kind) {
    const double alpha = 0.5 * w.omega * w.dt;
    const double corr = 1.0 - alpha * alpha;
    switch (kind) {
        case OscConserved::C_n: {
            double u = need(w.u, "u");
            double avg = 0.5 * (need(w.v_half, "v_half") + need(w.v_prev_half, "v_prev_half"));
            return 0.5 * (corr * u * u + avg * avg);
        }
        case OscConserved::C_half: {
            double v = need(w.v_half, "v_half");
            double avg = 0.5 * (need(w.u_next, "u_next") + need(w.u, "u"));
            return 0.5 * (avg * avg + corr * v * v);
        }
        case OscConserved::C_secondorder: {
            double u = need(w.u, "u");
            double du = (need(w.u_next, "u_next") - need(w.u_prev, "u_prev")) /
                        (2.0 * w.omega * w.dt);
            return corr * u * u + du * du;
        }
        case OscConserved::E_classical: {
            double u = need(w.u, "u");
            double du = (need(w.u_next, "u_next") - need(w.u_prev, "u_prev")) / (2.0 * w.dt);
            return 0.5 * (du * du + (w.omega * u) * (w.omega * u));
        }
    }
    throw std::invalid_argument("conserved: unknown kind");
}

}  // namespace mimetic
