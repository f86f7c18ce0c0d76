#include "mimetic/ode_system.hpp"

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

std::vector<double> scaled_avg(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = 0.5 * (x[i] + y[i]);
    return out;
}

const std::vector<double>& need(const std::vector<double>& v, std::size_t len,
                                const char* name) {
    if (v.size() != len)
        throw std::invalid_argument(std::string("skew window lacks ") + name +
                                    " (or it has the wrong length)");
    return v;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

SkewOperator::SkewOperator(long rows_, long cols_) : rows(rows_), cols(cols_) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("SkewOperator: dimensions must be positive");
    a.assign(static_cast<std::size_t>(rows * cols), 0.0);
}

std::vector<double> SkewOperator::apply(const std::vector<double>& g) const {
    if (static_cast<long>(g.size()) != cols)
        throw std::invalid_argument("SkewOperator::apply: vector length does not match cols");
    std::vector<double> out(static_cast<std::size_t>(rows), 0.0);
    for (long i = 0; i < rows; ++i) {
        double s = 0.0;
        for (long j = 0; j < cols; ++j) s += at(i, j) * g[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

std::vector<double> SkewOperator::apply_transpose(const std::vector<double>& f) const {
    if (static_cast<long>(f.size()) != rows)
        throw std::invalid_argument(
            "SkewOperator::apply_transpose: vector length does not match rows");
    std::vector<double> out(static_cast<std::size_t>(cols), 0.0);
    for (long j = 0; j < cols; ++j) {
        double s = 0.0;
        for (long i = 0; i < rows; ++i) s += at(i, j) * f[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(j)] = s;
    }
    return out;
}

SkewOperator SkewOperator::seeded_random(long rows, long cols, std::uint64_t seed) {
    SkewOperator op(rows, cols);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& x : op.a) x = dist(rng);
    return op;
}

SkewState init_g_half(const std::vector<double>& f0, const std::vector<double>& g0,
                      const SkewOperator& op, double dt) {
    if (static_cast<long>(f0.size()) != op.rows || static_cast<long>(g0.size()) != op.cols)
        throw std::invalid_argument("init_g_half: state lengths do not match the operator");
    std::vector<double> atf = op.apply_transpose(f0);
    SkewState s;
    s.f = f0;
    s.g_half = g0;
    for (std::size_t j = 0; j < s.g_half.size(); ++j) s.g_half[j] -= 0.5 * dt * atf[j];
    s.n_step = 0;
    s.dt = dt;
    return s;
}

SkewState leapfrog_step(const SkewState& s, const SkewOperator& op) {
    if (static_cast<long>(s.f.size()) != op.rows ||
        static_cast<long>(s.g_half.size()) != op.cols)
        throw std::invalid_argument("leapfrog_step: state lengths do not match the operator");
    SkewState out = s;
    std::vector<double> ag = op.apply(s.g_half);
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] = s.f[i] + s.dt * ag[i];
    std::vector<double> atf = op.apply_transpose(out.f);
    for (std::size_t j = 0; j < out.g_half.size(); ++j)
        out.g_half[j] = s.g_half[j] - s.dt * atf[j];
    out.n_step = s.n_step + 1;
    if (!all_finite(out.f) || !all_finite(out.g_half))
        throw instability_error("skew leapfrog produced a non-finite value", out.n_step);
    return out;
}

double conserved(const SkewWindow& w, const SkewOperator& op, SkewConserved kind) {
    const std::size_t nf = static_cast<std::size_t>(op.rows);
    const std::size_t ng = static_cast<std::size_t>(op.cols);
    switch (kind) {
        case SkewConserved::C_half: {
            auto avg = scaled_avg(need(w.f_next, nf, "f_next"), need(w.f, nf, "f"));
            const auto& g = need(w.g_half, ng, "g_half");
            double corr = norm_sq(op.apply(g));
            return norm_sq(avg) + norm_sq(g) - 0.25 * w.dt * w.dt * corr;
        }
        case SkewConserved::C_n: {
            const auto& f = need(w.f, nf, "f");
            auto avg = scaled_avg(need(w.g_half, ng, "g_half"),
                                  need(w.g_prev_half, ng, "g_prev_half"));
            double corr = norm_sq(op.apply_transpose(f));
            return norm_sq(f) - 0.25 * w.dt * w.dt * corr + norm_sq(avg);
        }
        case SkewConserved::C_continuous: {
            const auto& f = need(w.f, nf, "f");
            auto avg = scaled_avg(need(w.g_half, ng, "g_half"),
                                  need(w.g_prev_half, ng, "g_prev_half"));
            return 0.5 * (norm_sq(f) + norm_sq(avg));
        }
        case SkewConserved::E_energy: {
            const auto& fp = need(w.f_prev, nf, "f_prev");
            const auto& fn = need(w.f_next, nf, "f_next");
            const auto& gp = need(w.g_prev_half, ng, "g_prev_half");
            const auto& gn = need(w.g_half, ng, "g_half");
            double df = 0.0, dg = 0.0;
            for (std::size_t i = 0; i < nf; ++i) {
                double d = (fn[i] - fp[i]) / (2.0 * w.dt);
                df += d * d;
            }
            for (std::size_t j = 0; j < ng; ++j) {
                double d = (gn[j] - gp[j]) / w.dt;
                dg += d * d;
            }
            return 0.5 * (df + dg);
        }
    }
    throw std::invalid_argument("conserved: unknown kind");
}

double operator_norm(const SkewOperator& op, double tol) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x0(static_cast<std::size_t>(op.cols));
    for (double& xi : x0) xi = dist(rng);

    auto gram = [&op](const std::vector<double>& x) {
        return op.apply_transpose(op.apply(x));
    };
    auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    auto scale = [](std::vector<double>& x, double c) {
        for (double& xi : x) xi *= c;
    };
    if (norm_sq(op.a) == 0.0) return 0.0;
    return std::sqrt(power_iteration(gram, dot, scale, std::move(x0), tol));
}

double second_order_residual(const SkewWindow& w, const SkewOperator& op, SkewSeries which) {
    const std::size_t nf = static_cast<std::size_t>(op.rows);
    const std::size_t ng = static_cast<std::size_t>(op.cols);
    std::vector<double> resid;
    if (which == SkewSeries::f_series) {
        const auto& fp = need(w.f_prev, nf, "f_prev");
        const auto& f = need(w.f, nf, "f");
        const auto& fn = need(w.f_next, nf, "f_next");
        std::vector<double> aat = op.apply(op.apply_transpose(f));
        resid.resize(nf);
        for (std::size_t i = 0; i < nf; ++i)
            resid[i] = (fn[i] - 2.0 * f[i] + fp[i]) / (w.dt * w.dt) + aat[i];
    } else {
        const auto& gp = need(w.g_prev_half, ng, "g_prev_half");
        const auto& g = need(w.g_half, ng, "g_half");
        const auto& gn = need(w.g_next_half, ng, "g_next_half");
        std::vector<double> ata = op.apply_transpose(op.apply(g));
        resid.resize(ng);
        for (std::size_t j = 0; j < ng; ++j)
            resid[j] = (gn[j] - 2.0 * g[j] + gp[j]) / (w.dt * w.dt) + ata[j];
    }
    return std::sqrt(norm_sq(resid));
}

}  // namespace mimetic
