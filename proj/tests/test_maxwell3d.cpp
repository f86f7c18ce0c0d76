#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mimetic/diagnostics.hpp"
#include "mimetic/errors.hpp"
#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"
#include "mimetic/maxwell3d.hpp"
#include "mimetic/operators.hpp"

using namespace mimetic;

namespace {

Field3 constant_field(FieldKind kind, const GridSpec3& g, double value) {
    Field3 f(kind, g);
    for (double& v : f.data()) v = value;
    return f;
}

Field3 curl_h_term(const Field3& h, const Field3& eps, const Field3& mu) {
    const Material mat = maxwell_material(eps, mu);
    return apply_material(StarOp::A_inv, apply_diff(DiffOp::Rstar, h), mat);
}

Field3 curl_e_term(const Field3& e, const Field3& eps, const Field3& mu) {
    const Material mat = maxwell_material(eps, mu);
    return apply_material(StarOp::B_inv, apply_diff(DiffOp::R, e), mat);
}

struct MaxwellDrift {
    double c_n = 0.0;
    double c_half = 0.0;
    double div_e = 0.0;
    double div_h = 0.0;
};

MaxwellDrift run_and_measure(const Field3& eps, const Field3& mu, const GridSpec3& g,
                             double dt_factor, long steps, std::uint64_t seed) {
    const Field3 e0 = make_random_field(FieldKind::EdgeVector, g, seed);
    const Field3 h0 = make_random_field(FieldKind::DualEdgeVector, g, seed + 1);
    const double dt = dt_factor * cfl_estimate(eps, mu, g, 1e-8);

    MaxwellState s = init_h_half(e0, h0, eps, mu, dt);
    Field3 h_prev = s.H_half;
    add_scaled(h_prev, dt, curl_e_term(s.E, eps, mu));

    MaxwellDrift out;
    double cn0 = 0.0, ch0 = 0.0;
    for (long n = 0; n < steps; ++n) {
        const MaxwellState next = leapfrog_step(s);
        MaxwellWindow w;
        w.E = s.E;
        w.E_next = next.E;
        w.H_prev_half = h_prev;
        w.H_half = s.H_half;
        w.eps = eps;
        w.mu = mu;
        w.dt = dt;
        const double cn = conserved(w, MaxwellConserved::C_n);
        const double ch = conserved(w, MaxwellConserved::C_half);
        if (n == 0) {
            cn0 = cn;
            ch0 = ch;
        }
        out.c_n = std::max(out.c_n, std::abs(cn - cn0) / std::abs(cn0));
        out.c_half = std::max(out.c_half, std::abs(ch - ch0) / std::abs(ch0));
        const auto [de, dh] = divergence_diagnostics(s);
        out.div_e = std::max(out.div_e, de);
        out.div_h = std::max(out.div_h, dh);
        h_prev = s.H_half;
        s = next;
    }
    return out;
}

}  // namespace

TEST_CASE("one step reproduces the hand-written staggered curl update bitwise") {
    const GridSpec3 g{4, 4, 4, 1.0, 1.0, 1.0};
    const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
    const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);
    const Field3 e0 = make_random_field(FieldKind::EdgeVector, g, 1);
    const Field3 h0 = make_random_field(FieldKind::DualEdgeVector, g, 2);
    const double dt = 0.3;

    const MaxwellState s = init_h_half(e0, h0, eps, mu, dt);
    const MaxwellState next = leapfrog_step(s);

    const long n = 4;
    auto wrap_up = [&](long i) { return (i + 1 == n) ? 0 : i + 1; };
    auto wrap_dn = [&](long i) { return (i == 0) ? n - 1 : i - 1; };

    Field3 e1(FieldKind::EdgeVector, g);
    for (long k = 0; k < n; ++k)
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < n; ++i) {
                const Field3& h = s.H_half;
                const double cx = (h.at(2, i, j, k) - h.at(2, i, wrap_dn(j), k)) * 1.0 -
                                  (h.at(1, i, j, k) - h.at(1, i, j, wrap_dn(k))) * 1.0;
                const double cy = (h.at(0, i, j, k) - h.at(0, i, j, wrap_dn(k))) * 1.0 -
                                  (h.at(2, i, j, k) - h.at(2, wrap_dn(i), j, k)) * 1.0;
                const double cz = (h.at(1, i, j, k) - h.at(1, wrap_dn(i), j, k)) * 1.0 -
                                  (h.at(0, i, j, k) - h.at(0, i, wrap_dn(j), k)) * 1.0;
                e1.at(0, i, j, k) = s.E.at(0, i, j, k) + dt * cx;
                e1.at(1, i, j, k) = s.E.at(1, i, j, k) + dt * cy;
                e1.at(2, i, j, k) = s.E.at(2, i, j, k) + dt * cz;
            }
    CHECK(next.E.data() == e1.data());

    Field3 h1(FieldKind::DualEdgeVector, g);
    for (long k = 0; k < n; ++k)
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < n; ++i) {
                const double cx = (e1.at(2, i, wrap_up(j), k) - e1.at(2, i, j, k)) * 1.0 -
                                  (e1.at(1, i, j, wrap_up(k)) - e1.at(1, i, j, k)) * 1.0;
                const double cy = (e1.at(0, i, j, wrap_up(k)) - e1.at(0, i, j, k)) * 1.0 -
                                  (e1.at(2, wrap_up(i), j, k) - e1.at(2, i, j, k)) * 1.0;
                const double cz = (e1.at(1, wrap_up(i), j, k) - e1.at(1, i, j, k)) * 1.0 -
                                  (e1.at(0, i, wrap_up(j), k) - e1.at(0, i, j, k)) * 1.0;
                h1.at(0, i, j, k) = s.H_half.at(0, i, j, k) + (-dt) * cx;
                h1.at(1, i, j, k) = s.H_half.at(1, i, j, k) + (-dt) * cy;
                h1.at(2, i, j, k) = s.H_half.at(2, i, j, k) + (-dt) * cz;
            }
    CHECK(next.H_half.data() == h1.data());
}

TEST_CASE("cfl_estimate matches the closed form and scales with spacing and eps") {
    const GridSpec3 g{8, 8, 8, 1.0, 1.0, 1.0};
    const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
    const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);
    const double base = cfl_estimate(eps, mu, g, 1e-8);
    CHECK(base == doctest::Approx(2.0 / std::sqrt(12.0)).epsilon(1e-4));

    const GridSpec3 fine{8, 8, 8, 0.5, 0.5, 0.5};
    const Field3 eps_f = constant_field(FieldKind::EdgeVector, fine, 1.0);
    const Field3 mu_f = constant_field(FieldKind::FaceVector, fine, 1.0);
    CHECK(cfl_estimate(eps_f, mu_f, fine, 1e-8) ==
          doctest::Approx(0.5 * base).epsilon(1e-4));

    const Field3 eps4 = constant_field(FieldKind::EdgeVector, g, 4.0);
    CHECK(cfl_estimate(eps4, mu, g, 1e-8) == doctest::Approx(2.0 * base).epsilon(1e-4));
}

TEST_CASE("a curl-built field starts with vanishing weighted divergences") {
    const GridSpec3 g{8, 8, 8, 0.9, 1.1, 1.0};
    const Material coeffs = random_material(g, 14);
    const Field3& eps = coeffs.A;
    const Field3& mu = coeffs.B;

    const Field3 psi = make_random_field(FieldKind::DualEdgeVector, g, 50);
    const Field3 e0 = apply_material(
        StarOp::A_inv, apply_diff(DiffOp::Rstar, psi), maxwell_material(eps, mu));
    const Field3 h0(FieldKind::DualEdgeVector, g);

    const MaxwellState s = init_h_half(e0, h0, eps, mu, 0.25);
    CHECK(max_abs(s.div_e0) <= 1e-12);
    CHECK(max_abs(s.div_h0) <= 1e-12);
    const auto [de, dh] = divergence_diagnostics(s);
    CHECK(de == 0.0);
    CHECK(dh == 0.0);
}

TEST_CASE("both invariants and both divergences hold along long runs") {
    const GridSpec3 g{16, 16, 16, 1.0, 1.0, 1.0};

    SUBCASE("vacuum coefficients") {
        const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
        const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);
        const MaxwellDrift r = run_and_measure(eps, mu, g, 0.9, 500, 60);
        CHECK(r.c_n <= 1e-12);
        CHECK(r.c_half <= 1e-12);
        CHECK(r.div_e <= 1e-11);
        CHECK(r.div_h <= 1e-11);
    }

    SUBCASE("rough positive coefficients") {
        const Material coeffs = random_material(g, 15);
        const MaxwellDrift r = run_and_measure(coeffs.A, coeffs.B, g, 0.9, 500, 61);
        CHECK(r.c_n <= 1e-12);
        CHECK(r.c_half <= 1e-12);
        CHECK(r.div_e <= 1e-11);
        CHECK(r.div_h <= 1e-11);
    }
}

TEST_CASE("a single transverse mode follows the discrete dispersion relation") {
    const GridSpec3 g{4, 4, 16, 1.0, 1.0, 0.5};
    const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
    const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);

    Field3 e0(FieldKind::EdgeVector, g);
    for (long k = 0; k < g.nz; ++k) {
        const double value =
            std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(g.nz));
        for (long j = 0; j < g.ny; ++j)
            for (long i = 0; i < g.nx; ++i) e0.at(0, i, j, k) = value;
    }
    const double sz = std::sin(std::numbers::pi / static_cast<double>(g.nz));
    const double lambda = 4.0 * sz * sz / (g.dz * g.dz);
    const double dt = 0.4;
    const double psi = std::acos(1.0 - 0.5 * dt * dt * lambda);

    MaxwellState s = init_h_half(e0, Field3(FieldKind::DualEdgeVector, g), eps, mu, dt);
    for (long m = 0; m <= 20; ++m) {
        const double amp = std::cos(static_cast<double>(m) * psi);
        double worst = 0.0;
        for (long k = 0; k < g.nz; ++k)
            for (long j = 0; j < g.ny; ++j)
                for (long i = 0; i < g.nx; ++i) {
                    worst = std::max(worst, std::abs(s.E.at(0, i, j, k) -
                                                     amp * e0.at(0, i, j, k)));
                    worst = std::max(worst, std::abs(s.E.at(1, i, j, k)));
                    worst = std::max(worst, std::abs(s.E.at(2, i, j, k)));
                }
        CHECK(worst <= 1e-10);
        s = leapfrog_step(s);
    }
}

TEST_CASE("stepping past the curl bound diverges, below it stays bounded") {
    const GridSpec3 g{8, 8, 8, 1.0, 1.0, 1.0};
    const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
    const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);
    const double dt_max = cfl_estimate(eps, mu, g, 1e-8);
    const Field3 e0 = make_random_field(FieldKind::EdgeVector, g, 70);
    const Field3 h0 = make_random_field(FieldKind::DualEdgeVector, g, 71);

    auto step = [](MaxwellState s) { return leapfrog_step(s); };
    auto norm = [](const MaxwellState& s) {
        return std::max(max_abs(s.E), max_abs(s.H_half));
    };

    const StabilityReport calm =
        stability_probe(step, norm, init_h_half(e0, h0, eps, mu, 0.95 * dt_max), 300);
    CHECK(calm.stable);
    const StabilityReport wild =
        stability_probe(step, norm, init_h_half(e0, h0, eps, mu, 1.05 * dt_max), 2000);
    CHECK_FALSE(wild.stable);
}

TEST_CASE("two leapfrog updates compose into the curl-curl second-order form") {
    const GridSpec3 g{6, 6, 6, 0.8, 1.0, 1.2};
    const Material coeffs = random_material(g, 16);
    const Field3& eps = coeffs.A;
    const Field3& mu = coeffs.B;
    const Material mat = maxwell_material(eps, mu);
    const double dt = 0.4 * cfl_estimate(eps, mu, g, 1e-8);

    const Field3 e0 = make_random_field(FieldKind::EdgeVector, g, 80);
    const Field3 h0 = make_random_field(FieldKind::DualEdgeVector, g, 81);
    MaxwellState s = init_h_half(e0, h0, eps, mu, dt);

    std::vector<Field3> e{s.E};
    for (int m = 0; m < 4; ++m) {
        s = leapfrog_step(s);
        e.push_back(s.E);
    }
    for (std::size_t m = 1; m + 1 < e.size(); ++m) {
        const Field3 cc = second_order(SecondOrderOp::curlcurl_C, mat, e[m]);
        for (std::size_t i = 0; i < cc.data().size(); ++i) {
            const double resid = e[m + 1].data()[i] - 2.0 * e[m].data()[i] +
                                 e[m - 1].data()[i] + dt * dt * cc.data()[i];
            CHECK(std::abs(resid) <= 1e-12);
        }
    }
}

TEST_CASE("coefficient lattices and windows are validated") {
    const GridSpec3 g{4, 4, 4, 1.0, 1.0, 1.0};
    const Field3 eps = constant_field(FieldKind::EdgeVector, g, 1.0);
    const Field3 mu = constant_field(FieldKind::FaceVector, g, 1.0);
    const Field3 e0 = make_random_field(FieldKind::EdgeVector, g, 1);
    const Field3 h0 = make_random_field(FieldKind::DualEdgeVector, g, 2);

    CHECK_THROWS_AS(maxwell_material(mu, mu), std::invalid_argument);
    Field3 bad_eps = eps;
    bad_eps.data()[5] = 0.0;
    CHECK_THROWS_AS(maxwell_material(bad_eps, mu), std::invalid_argument);
    CHECK_THROWS_AS(init_h_half(e0, h0, bad_eps, mu, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(init_h_half(h0, h0, eps, mu, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(init_h_half(e0, e0, eps, mu, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(init_h_half(e0, h0, eps, mu, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cfl_estimate(bad_eps, mu, g, 1e-8), std::invalid_argument);

    MaxwellWindow w;
    w.E = e0;
    w.H_half = h0;
    w.eps = eps;
    w.mu = mu;
    w.dt = 0.1;
    CHECK_THROWS_AS(conserved(w, MaxwellConserved::C_n), std::invalid_argument);
    CHECK_THROWS_AS(conserved(w, MaxwellConserved::C_half), std::invalid_argument);
}
