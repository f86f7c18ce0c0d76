#include "mimetic/wave1d.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mimetic/errors.hpp"
#include "mimetic/power_iteration.hpp"

namespace mimetic {

namespace {

double norm_sq(const std::vector<double>& x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return s;
}

const std::vector<double>& need(const std::vector<double>& v, std::size_t len,
                                const char* name) {
    if (v.size() != len)
        throw std::invalid_argument(std::string("wave1d window lacks ") + name +
                                    " (or it has the wrong length)");
    return v;
}

}  // namespace

std::vector<double> delta(const std::vector<double>& values, Delta direction) {
    const std::size_t n = values.size();
    std::vector<double> out(n);
    if (direction == Delta::to_half) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ip = (i + 1 == n) ? 0 : i + 1;
            out[i] = values[ip] - values[i];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t im = (i == 0) ? n - 1 : i - 1;
            out[i] = values[i] - values[im];
        }
    }
    return out;
}

Wave1DState leapfrog_step(const Wave1DState& s) {
    if (s.u.size() != s.v_half.size() || s.u.size() < 2)
        throw std::invalid_argument("wave1d leapfrog_step: u and v must share a length >= 2");
    const double r = s.c * s.dt / s.dx;
    Wave1DState out = s;
    std::vector<double> dv = delta(s.v_half, Delta::to_int);
    for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] = s.u[i] + r * dv[i];
    std::vector<double> du = delta(out.u, Delta::to_half);
    for (std::size_t i = 0; i < out.v_half.size(); ++i)
        out.v_half[i] = s.v_half[i] + r * du[i];
    out.n_step = s.n_step + 1;
    for (std::size_t i = 0; i < out.u.size(); ++i)
        if (!std::isfinite(out.u[i]) || !std::isfinite(out.v_half[i]))
            throw instability_error("wave1d leapfrog produced a non-finite value", out.n_step);
    return out;
}

double conserved(const Wave1DWindow& w, Wave1DConserved kind) {
    const double r = 0.5 * w.c * w.dt / w.dx;
    if (kind == Wave1DConserved::C_n) {
        const auto& u = need(w.u, w.u.size() ? w.u.size() : 1, "u");
        const auto& vp = need(w.v_prev_half, u.size(), "v_prev_half");
        const auto& v = need(w.v_half, u.size(), "v_half");
        std::vector<double> avg(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) avg[i] = 0.5 * (v[i] + vp[i]);
        return norm_sq(u) - r * r * norm_sq(delta(u, Delta::to_half)) + norm_sq(avg);
    }
    const auto& v = need(w.v_half, w.v_half.size() ? w.v_half.size() : 1, "v_half");
    const auto& u = need(w.u, v.size(), "u");
    const auto& un = need(w.u_next, v.size(), "u_next");
    std::vector<double> avg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) avg[i] = 0.5 * (un[i] + u[i]);
    return norm_sq(v) - r * r * norm_sq(delta(v, Delta::to_int)) + norm_sq(avg);
}

double cfl_max(double dx, double c) {
    if (!(dx > 0.0) || !(c > 0.0))
        throw std::invalid_argument("cfl_max: dx and c must be positive");
    return dx / c;
}

double delta_norm_estimate(long n, double tol) {
    if (n < 2) throw std::invalid_argument("delta_norm_estimate: need n >= 2");
    std::mt19937_64 rng(0x5deece66dULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x0(static_cast<std::size_t>(n));
    for (double& xi : x0) xi = dist(rng);

    auto gram = [](const std::vector<double>& x) {
        std::vector<double> d = delta(x, Delta::to_half);
        std::vector<double> dd = delta(d, Delta::to_int);
        for (double& v : dd) v = -v;
        return dd;
    };
    auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    auto scale = [](std::vector<double>& x, double c) {
        for (double& xi : x) xi *= c;
    };
    return std::sqrt(power_iteration(gram, dot, scale, std::move(x0), tol, 2000000));
}

}  // namespace mimetic
