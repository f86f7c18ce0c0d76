#include "mimetic/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mimetic/diagnostics.hpp"
#include "mimetic/errors.hpp"
#include "mimetic/inner.hpp"
#include "mimetic/maxwell3d.hpp"
#include "mimetic/ode_system.hpp"
#include "mimetic/operators.hpp"
#include "mimetic/oscillator.hpp"
#include "mimetic/positivity1d.hpp"
#include "mimetic/scalarwave3d.hpp"
#include "mimetic/snapshot.hpp"
#include "mimetic/wave1d.hpp"

namespace mimetic {

namespace {

constexpr double kNormTol = 1e-8;

std::string step_tag(long n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06ld", n);
    return buf;
}

std::vector<double> seeded_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

void write_line_snapshot(const std::vector<double>& values, const std::string& base,
                         double dx, long step, double time) {
    {
        std::ofstream raw(base + ".c0.f64", std::ios::binary | std::ios::trunc);
        if (!raw) throw std::runtime_error("cannot open " + base + ".c0.f64");
        raw.write(reinterpret_cast<const char*>(values.data()),
                  static_cast<std::streamsize>(values.size() * sizeof(double)));
        if (!raw) throw std::runtime_error("short write to " + base + ".c0.f64");
    }
    nlohmann::json side{
        {"kind", "line_scalar"},
        {"nx", values.size()}, {"ny", 1}, {"nz", 1},
        {"dx", dx}, {"dy", 1.0}, {"dz", 1.0},
        {"component", 0}, {"step", step}, {"time", time},
    };
    std::ofstream js(base + ".c0.json", std::ios::trunc);
    if (!js) throw std::runtime_error("cannot open " + base + ".c0.json");
    js << side.dump(2) << "\n";
    if (!js) throw std::runtime_error("short write to " + base + ".c0.json");
}

ConservedSeries run_oscillator(const RunConfig& rc) {
    const double dt = rc.has_dt ? rc.dt : rc.cfl_factor * 2.0 / rc.omega;
    OscState st = init_half(rc.u0, rc.du0, rc.omega, dt);
    double v_prev = st.v_half + dt * (rc.omega * st.u);

    ConservedSeries series({"C_n", "C_half"});
    for (long n = 0; n <= rc.steps; ++n) {
        const OscState next = leapfrog_step(st);
        OscWindow w;
        w.u = st.u;
        w.u_next = next.u;
        w.v_prev_half = v_prev;
        w.v_half = st.v_half;
        w.dt = dt;
        w.omega = rc.omega;
        series.append(n, static_cast<double>(n) * dt,
                      {conserved(w, OscConserved::C_n),
                       conserved(w, OscConserved::C_half)});
        if (n < rc.steps) {
            v_prev = st.v_half;
            st = next;
        }
    }
    return series;
}

ConservedSeries run_odesys(const RunConfig& rc) {
    const SkewOperator op =
        SkewOperator::seeded_random(rc.rows, rc.cols, rc.seed);
    double dt = rc.dt;
    if (!rc.has_dt) {
        const double nrm = operator_norm(op, 1e-12);
        if (!(nrm > 0.0))
            throw std::invalid_argument(
                "odesys: operator norm is zero; give an explicit dt");
        dt = rc.cfl_factor * 2.0 / nrm;
    }
    const std::vector<double> f0 =
        seeded_vector(static_cast<std::size_t>(rc.rows), rc.seed + 1);
    const std::vector<double> g0 =
        seeded_vector(static_cast<std::size_t>(rc.cols), rc.seed + 2);
    SkewState st = init_g_half(f0, g0, op, dt);

    std::vector<double> g_prev = st.g_half;
    {
        const std::vector<double> atf = op.apply_transpose(st.f);
        for (std::size_t i = 0; i < g_prev.size(); ++i) g_prev[i] += dt * atf[i];
    }

    ConservedSeries series({"C_n", "C_half"});
    for (long n = 0; n <= rc.steps; ++n) {
        const SkewState next = leapfrog_step(st, op);
        SkewWindow w;
        w.f = st.f;
        w.f_next = next.f;
        w.g_prev_half = g_prev;
        w.g_half = st.g_half;
        w.dt = dt;
        series.append(n, static_cast<double>(n) * dt,
                      {conserved(w, op, SkewConserved::C_n),
                       conserved(w, op, SkewConserved::C_half)});
        if (n < rc.steps) {
            g_prev = st.g_half;
            st = next;
        }
    }
    return series;
}

ConservedSeries run_wave1d(const RunConfig& rc, const std::string& out_dir) {
    const long N = rc.n;
    const double dt = rc.has_dt ? rc.dt : rc.cfl_factor * cfl_max(rc.dx, rc.c);
    const double length = static_cast<double>(N) * rc.dx;

    std::vector<double> u0(static_cast<std::size_t>(N));
    if (rc.initial.type == "sine") {
        for (long i = 0; i < N; ++i)
            u0[static_cast<std::size_t>(i)] =
                rc.initial.amplitude *
                std::sin(2.0 * std::numbers::pi *
                         static_cast<double>(rc.initial.mode * i) /
                         static_cast<double>(N));
    } else {
        const double w = rc.initial.width > 0.0 ? rc.initial.width : length / 16.0;
        for (long i = 0; i < N; ++i) {
            const double x = static_cast<double>(i) * rc.dx - 0.5 * length;
            u0[static_cast<std::size_t>(i)] =
                rc.initial.amplitude * std::exp(-0.5 * x * x / (w * w));
        }
    }

    const double r = rc.c * dt / rc.dx;
    const std::vector<double> du = delta(u0, Delta::to_half);
    Wave1DState st;
    st.u = u0;
    st.v_half.resize(u0.size());
    for (std::size_t i = 0; i < u0.size(); ++i) st.v_half[i] = 0.5 * r * du[i];
    st.dt = dt;
    st.dx = rc.dx;
    st.c = rc.c;

    std::vector<double> v_prev(u0.size());
    for (std::size_t i = 0; i < u0.size(); ++i)
        v_prev[i] = st.v_half[i] - r * du[i];

    ConservedSeries series({"C_n", "C_half"});
    for (long n = 0; n <= rc.steps; ++n) {
        const Wave1DState next = leapfrog_step(st);
        Wave1DWindow w;
        w.u = st.u;
        w.u_next = next.u;
        w.v_prev_half = v_prev;
        w.v_half = st.v_half;
        w.dt = dt;
        w.dx = rc.dx;
        w.c = rc.c;
        series.append(n, static_cast<double>(n) * dt,
                      {conserved(w, Wave1DConserved::C_n),
                       conserved(w, Wave1DConserved::C_half)});
        if (rc.snapshot_every > 0 && n % rc.snapshot_every == 0) {
            write_line_snapshot(st.u, out_dir + "/u_step" + step_tag(n), rc.dx, n,
                                static_cast<double>(n) * dt);
            write_line_snapshot(st.v_half, out_dir + "/v_step" + step_tag(n), rc.dx,
                                n, static_cast<double>(n) * dt);
        }
        if (n < rc.steps) {
            v_prev = st.v_half;
            st = next;
        }
    }
    return series;
}

GridSpec3 to_grid(const GridConfig& gc) {
    GridSpec3 g{gc.nx, gc.ny, gc.nz, gc.dx, gc.dy, gc.dz};
    validate(g);
    return g;
}

Material build_material(const GridSpec3& g, const CoefficientConfig& mc) {
    if (mc.type == "random") return random_material(g, mc.seed, mc.lo, mc.hi);
    Material m = unit_material(g);
    for (Field3* f : {&m.a, &m.b, &m.A, &m.B})
        for (double& v : f->data()) v = mc.value;
    return m;
}

Field3 gaussian_scalar(const GridSpec3& g, FieldKind kind, double amplitude,
                       double width) {
    Field3 f(kind, g);
    const double lx = static_cast<double>(g.nx) * g.dx;
    const double ly = static_cast<double>(g.ny) * g.dy;
    const double lz = static_cast<double>(g.nz) * g.dz;
    const double w =
        width > 0.0 ? width : 0.125 * std::min(lx, std::min(ly, lz));
    for (long k = 0; k < g.nz; ++k)
        for (long j = 0; j < g.ny; ++j)
            for (long i = 0; i < g.nx; ++i) {
                const auto p = site_position(g, kind, 0, i, j, k);
                const double x = p[0] - 0.5 * lx;
                const double y = p[1] - 0.5 * ly;
                const double z = p[2] - 0.5 * lz;
                f.at(0, i, j, k) =
                    amplitude * std::exp(-0.5 * (x * x + y * y + z * z) / (w * w));
            }
    return f;
}

ConservedSeries run_scalarwave(const RunConfig& rc, const std::string& out_dir) {
    const GridSpec3 g = to_grid(rc.grid);
    const Material mat = build_material(g, rc.material);
    const bool starred = rc.starred;
    const FieldKind uk =
        starred ? FieldKind::DualNodeScalar : FieldKind::NodeScalar;
    const FieldKind vk =
        starred ? FieldKind::FaceVector : FieldKind::DualFaceVector;

    Field3 u0;
    if (rc.initial.type == "gaussian") {
        u0 = gaussian_scalar(g, uk, rc.initial.amplitude, rc.initial.width);
    } else {
        u0 = make_random_field(uk, g, rc.initial.seed);
        for (double& v : u0.data()) v *= rc.initial.amplitude;
    }
    const Field3 v0(vk, g);

    const double dt =
        rc.has_dt ? rc.dt
                  : rc.cfl_factor * dt_max_estimate(g, mat, starred, kNormTol);
    ScalarWaveState st = init_v_half(u0, v0, mat, dt);

    auto grad_chain = [&](const Field3& u) {
        if (starred)
            return apply_material(StarOp::B, apply_diff(DiffOp::Gstar, u), mat);
        return apply_material(StarOp::A, apply_diff(DiffOp::G, u), mat);
    };
    Field3 v_prev = st.v_half;
    add_scaled(v_prev, -dt, grad_chain(st.u));

    ConservedSeries series({"C_n", "C_half", "curl"});
    for (long n = 0; n <= rc.steps; ++n) {
        const ScalarWaveState next = leapfrog_step(st);
        ScalarWaveWindow w;
        w.u = st.u;
        w.u_next = next.u;
        w.v_prev_half = v_prev;
        w.v_half = st.v_half;
        w.mat = mat;
        w.dt = dt;
        series.append(n, static_cast<double>(n) * dt,
                      {conserved(w, WaveConserved::C_n),
                       conserved(w, WaveConserved::C_half), curl_diagnostic(st)});
        if (rc.snapshot_every > 0 && n % rc.snapshot_every == 0)
            write_snapshot(st.u, out_dir + "/u_step" + step_tag(n), n,
                           static_cast<double>(n) * dt);
        if (n < rc.steps) {
            v_prev = st.v_half;
            st = next;
        }
    }
    return series;
}

ConservedSeries run_maxwell(const RunConfig& rc, const std::string& out_dir) {
    const GridSpec3 g = to_grid(rc.grid);
    const Material coeffs = build_material(g, rc.material);
    const Field3& eps = coeffs.A;
    const Field3& mu = coeffs.B;
    const Material mmat = maxwell_material(eps, mu);

    Field3 e0(FieldKind::EdgeVector, g);
    Field3 h0(FieldKind::DualEdgeVector, g);
    if (rc.initial.type == "solenoidal") {
        const Field3 psi =
            make_random_field(FieldKind::DualEdgeVector, g, rc.initial.seed);
        e0 = apply_material(StarOp::A_inv, apply_diff(DiffOp::Rstar, psi), mmat);
        for (double& v : e0.data()) v *= rc.initial.amplitude;
    } else {
        e0 = make_random_field(FieldKind::EdgeVector, g, rc.initial.seed);
        h0 = make_random_field(FieldKind::DualEdgeVector, g, rc.initial.seed + 1);
        for (double& v : e0.data()) v *= rc.initial.amplitude;
        for (double& v : h0.data()) v *= rc.initial.amplitude;
    }

    const double dt =
        rc.has_dt ? rc.dt : rc.cfl_factor * cfl_estimate(eps, mu, g, kNormTol);
    MaxwellState st = init_h_half(e0, h0, eps, mu, dt);

    Field3 h_prev = st.H_half;
    add_scaled(h_prev, dt,
               apply_material(StarOp::B_inv, apply_diff(DiffOp::R, st.E), mmat));

    ConservedSeries series({"C_n", "C_half", "divE_drift", "divH_drift"});
    for (long n = 0; n <= rc.steps; ++n) {
        const MaxwellState next = leapfrog_step(st);
        MaxwellWindow w;
        w.E = st.E;
        w.E_next = next.E;
        w.H_prev_half = h_prev;
        w.H_half = st.H_half;
        w.eps = eps;
        w.mu = mu;
        w.dt = dt;
        const auto div_drift = divergence_diagnostics(st);
        series.append(n, static_cast<double>(n) * dt,
                      {conserved(w, MaxwellConserved::C_n),
                       conserved(w, MaxwellConserved::C_half), div_drift.first,
                       div_drift.second});
        if (rc.snapshot_every > 0 && n % rc.snapshot_every == 0) {
            write_snapshot(st.E, out_dir + "/E_step" + step_tag(n), n,
                           static_cast<double>(n) * dt);
            write_snapshot(st.H_half, out_dir + "/H_step" + step_tag(n), n,
                           static_cast<double>(n) * dt);
        }
        if (n < rc.steps) {
            h_prev = st.H_half;
            st = next;
        }
    }
    return series;
}

std::vector<double> line_profile(const RunConfig& rc, bool cell_centered) {
    const long N = rc.n;
    const double length = static_cast<double>(N) * rc.dx;
    std::vector<double> rho(static_cast<std::size_t>(N), 0.0);
    if (rc.initial.type == "square") {
        for (long i = 0; i < N; ++i)
            if (std::abs(i - N / 2) <= N / 8)
                rho[static_cast<std::size_t>(i)] = rc.initial.amplitude;
    } else if (rc.initial.type == "spike") {
        rho[static_cast<std::size_t>(N / 2)] = rc.initial.amplitude;
    } else {
        const double w = rc.initial.width > 0.0 ? rc.initial.width : length / 16.0;
        const double off = cell_centered ? 0.5 : 0.0;
        for (long i = 0; i < N; ++i) {
            const double x = (static_cast<double>(i) + off) * rc.dx - 0.5 * length;
            rho[static_cast<std::size_t>(i)] =
                rc.initial.amplitude * std::exp(-0.5 * x * x / (w * w));
        }
    }
    return rho;
}

ConservedSeries run_transport(const RunConfig& rc) {
    const long N = rc.n;
    TransportState st;
    st.rho = line_profile(rc, true);
    st.vel.resize(static_cast<std::size_t>(N));
    if (rc.velocity.type == "uniform") {
        for (double& v : st.vel) v = rc.velocity.value;
    } else {
        for (long i = 0; i < N; ++i)
            st.vel[static_cast<std::size_t>(i)] =
                rc.velocity.max * std::sin(2.0 * std::numbers::pi *
                                           static_cast<double>(i) /
                                           static_cast<double>(N));
    }
    double vmax = 0.0;
    for (double v : st.vel) vmax = std::max(vmax, std::abs(v));
    if (rc.has_dt) {
        st.dt = rc.dt;
    } else {
        if (!(vmax > 0.0))
            throw std::invalid_argument(
                "transport1d: velocity is identically zero; give an explicit dt");
        st.dt = rc.cfl_factor * rc.dx / vmax;
    }
    st.dx = rc.dx;

    ConservedSeries series({"mass", "min_rho"});
    for (long n = 0; n <= rc.steps; ++n) {
        series.append(n, static_cast<double>(n) * st.dt,
                      {total_mass(st.rho, st.dx),
                       *std::min_element(st.rho.begin(), st.rho.end())});
        if (n < rc.steps) st = transport_step(st);
    }
    return series;
}

ConservedSeries run_diffusion(const RunConfig& rc) {
    const long N = rc.n;
    DiffusionState st;
    st.rho = line_profile(rc, true);
    if (rc.coefficient.type == "random") {
        std::mt19937_64 rng(rc.coefficient.seed);
        std::uniform_real_distribution<double> dist(rc.coefficient.lo,
                                                    rc.coefficient.hi);
        st.D.resize(static_cast<std::size_t>(N));
        for (double& d : st.D) d = dist(rng);
    } else {
        st.D.assign(static_cast<std::size_t>(N), rc.coefficient.value);
    }
    double wmax = 0.0;
    for (long c = 0; c < N; ++c) {
        const long r = (c + 1 == N) ? 0 : c + 1;
        wmax = std::max(wmax, st.D[static_cast<std::size_t>(c)] +
                                  st.D[static_cast<std::size_t>(r)]);
    }
    if (rc.has_dt) {
        st.dt = rc.dt;
    } else {
        if (!(wmax > 0.0))
            throw std::invalid_argument(
                "diffusion1d: coefficients are identically zero; give an explicit dt");
        st.dt = rc.cfl_factor * rc.dx * rc.dx / wmax;
    }
    st.dx = rc.dx;

    ConservedSeries series({"mass", "min_rho"});
    for (long n = 0; n <= rc.steps; ++n) {
        series.append(n, static_cast<double>(n) * st.dt,
                      {total_mass(st.rho, st.dx),
                       *std::min_element(st.rho.begin(), st.rho.end())});
        if (n < rc.steps) st = diffusion_step(st);
    }
    return series;
}

void print_summary(const ConservedSeries& series) {
    for (const std::string& label : series.labels) {
        if (label != "C_n" && label != "C_half" && label != "mass") continue;
        const DriftReport rep = drift_report(series, label);
        std::cout << label << ": first " << format_g17(rep.first_value)
                  << ", max rel drift " << format_g17(rep.max_rel_drift) << "\n";
    }
}

}  // namespace

int run_scenario(const RunConfig& rc, const std::string& out_dir, bool quiet) {
    try {
        std::filesystem::create_directories(out_dir);

        ConservedSeries series;
        if (rc.scenario == "oscillator")
            series = run_oscillator(rc);
        else if (rc.scenario == "odesys")
            series = run_odesys(rc);
        else if (rc.scenario == "wave1d")
            series = run_wave1d(rc, out_dir);
        else if (rc.scenario == "scalarwave3d")
            series = run_scalarwave(rc, out_dir);
        else if (rc.scenario == "maxwell3d")
            series = run_maxwell(rc, out_dir);
        else if (rc.scenario == "transport1d")
            series = run_transport(rc);
        else if (rc.scenario == "diffusion1d")
            series = run_diffusion(rc);
        else
            throw std::invalid_argument("unknown scenario \"" + rc.scenario + "\"");

        write_csv_file(series, std::filesystem::path(out_dir) / "ledger.csv");
        if (!quiet) print_summary(series);
        return 0;
    } catch (const instability_error& e) {
        std::cerr << "instability at step " << e.step() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace mimetic
