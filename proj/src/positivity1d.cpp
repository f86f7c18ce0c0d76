#include "mimetic/positivity1d.hpp"

#include <cmath>
#include <stdexcept>

namespace mimetic {

namespace {

void check_common(std::size_t n_rho, std::size_t n_coef, double dt, double dx,
                  const char* what) {
    if (n_rho < 2 || n_rho != n_coef)
        throw std::invalid_argument(std::string(what) +
                                    ": rho and coefficient lengths must match and be >= 2");
    if (!(dt > 0.0) || !(dx > 0.0))
        throw std::invalid_argument(std::string(what) + ": dt and dx must be positive");
}

}  // namespace

TransportState transport_step(const TransportState& s) {
    check_common(s.rho.size(), s.vel.size(), s.dt, s.dx, "transport_step");
    const std::size_t n = s.rho.size();
    const double ratio = s.dt / s.dx;

    std::vector<double> amt(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = std::abs(s.vel[i]) * ratio;
        if (!(f <= 1.0))
            throw std::invalid_argument(
                "transport_step: |v| dt/dx exceeds 1 at an edge");
        const std::size_t donor = (s.vel[i] >= 0.0) ? (i == 0 ? n - 1 : i - 1) : i;
        amt[i] = f * s.rho[donor];
    }

    TransportState out = s;
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = (c + 1 == n) ? 0 : c + 1;
        double x = s.rho[c];
        if (s.vel[c] < 0.0) x -= amt[c];
        if (s.vel[r] >= 0.0) x -= amt[r];
        if (s.vel[c] >= 0.0) x += amt[c];
        if (s.vel[r] < 0.0) x += amt[r];
        out.rho[c] = x;
    }
    out.n_step = s.n_step + 1;
    return out;
}

DiffusionState diffusion_step(const DiffusionState& s) {
    check_common(s.rho.size(), s.D.size(), s.dt, s.dx, "diffusion_step");
    const std::size_t n = s.rho.size();
    const double r = s.dt / (s.dx * s.dx);
    for (double d : s.D)
        if (!(d >= 0.0))
            throw std::invalid_argument("diffusion_step: coefficients must be >= 0");

    DiffusionState out = s;
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t right = (c + 1 == n) ? 0 : c + 1;
        const std::size_t left = (c == 0) ? n - 1 : c - 1;
        const double w = (s.D[c] + s.D[right]) * r;
        if (!(w <= 1.0))
            throw std::invalid_argument(
                "diffusion_step: (D_left + D_right) dt/dx^2 exceeds 1 at a cell");
        out.rho[c] = (1.0 - w) * s.rho[c] + r * s.D[right] * s.rho[right] +
                     r * s.D[c] * s.rho[left];
    }
    out.n_step = s.n_step + 1;
    return out;
}

double total_mass(const std::vector<double>& rho, double dx) {
    double acc = 0.0;
    for (double v : rho) acc += v;
    return dx * acc;
}

}  // namespace mimetic
