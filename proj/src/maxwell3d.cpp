#include "mimetic/maxwell3d.hpp"

#include <cmath>
#include <stdexcept>

#include "mimetic/errors.hpp"
#include "mimetic/inner.hpp"
#include "mimetic/operators.hpp"

namespace mimetic {

namespace {

void check_lattices(const Field3& eps, const Field3& mu, const GridSpec3& g) {
    if (eps.kind() != FieldKind::EdgeVector || mu.kind() != FieldKind::FaceVector)
        throw std::invalid_argument(
            "maxwell: eps must be edge-sited and mu face-sited");
    if (!same_grid(eps.grid(), g) || !same_grid(mu.grid(), g))
        throw std::invalid_argument("maxwell: coefficient grids do not match");
    for (const Field3* f : {&eps, &mu})
        for (double v : f->data())
            if (!(v > 0.0))
                throw std::invalid_argument("maxwell: eps and mu must be positive");
}

const Field3& need(const Field3& f, FieldKind kind, const char* name) {
    if (f.data().empty() || f.kind() != kind)
        throw std::invalid_argument(std::string("maxwell window lacks ") + name);
    return f;
}

}  // namespace

Material maxwell_material(const Field3& eps, const Field3& mu) {
    const GridSpec3& g = eps.grid();
    check_lattices(eps, mu, g);
    Material m = unit_material(g);
    m.A = eps;
    m.B = mu;
    return m;
}

MaxwellState init_h_half(const Field3& E0, const Field3& H0, const Field3& eps,
                         const Field3& mu, double dt) {
    if (E0.kind() != FieldKind::EdgeVector || H0.kind() != FieldKind::DualEdgeVector)
        throw std::invalid_argument(
            "init_h_half: E0 must be an edge vector and H0 a dual edge vector");
    if (!same_grid(E0.grid(), H0.grid()))
        throw std::invalid_argument("init_h_half: grid mismatch");
    if (!(dt > 0.0)) throw std::invalid_argument("init_h_half: dt must be positive");
    const Material mat = maxwell_material(eps, mu);

    MaxwellState s;
    s.E = E0;
    s.H_half = H0;
    add_scaled(s.H_half, -0.5 * dt,
               apply_material(StarOp::B_inv, apply_diff(DiffOp::R, E0), mat));
    s.eps = eps;
    s.mu = mu;
    s.dt = dt;
    s.div_e0 = apply_diff(DiffOp::Dstar, apply_material(StarOp::A, s.E, mat));
    s.div_h0 = apply_diff(DiffOp::D, apply_material(StarOp::B, s.H_half, mat));
    return s;
}

MaxwellState leapfrog_step(const MaxwellState& s) {
    const Material mat = maxwell_material(s.eps, s.mu);
    MaxwellState out = s;
    add_scaled(out.E, s.dt,
               apply_material(StarOp::A_inv, apply_diff(DiffOp::Rstar, s.H_half), mat));
    add_scaled(out.H_half, -s.dt,
               apply_material(StarOp::B_inv, apply_diff(DiffOp::R, out.E), mat));
    out.n_step = s.n_step + 1;
    if (!all_finite(out.E) || !all_finite(out.H_half))
        throw instability_error("maxwell leapfrog produced a non-finite value",
                                out.n_step);
    return out;
}

double conserved(const MaxwellWindow& w, MaxwellConserved kind) {
    const Material mat = maxwell_material(w.eps, w.mu);
    const double q = 0.25 * w.dt * w.dt;

    if (kind == MaxwellConserved::C_half) {
        const Field3& e = need(w.E, FieldKind::EdgeVector, "E");
        const Field3& en = need(w.E_next, FieldKind::EdgeVector, "E_next");
        const Field3& h = need(w.H_half, FieldKind::DualEdgeVector, "H_half");
        const Field3 em = averaged(en, e);
        const Field3 ce =
            apply_material(StarOp::A_inv, apply_diff(DiffOp::Rstar, h), mat);
        return inner(FieldKind::EdgeVector, em, em, mat) +
               inner(FieldKind::DualEdgeVector, h, h, mat) -
               q * inner(FieldKind::EdgeVector, ce, ce, mat);
    }
    const Field3& e = need(w.E, FieldKind::EdgeVector, "E");
    const Field3& h = need(w.H_half, FieldKind::DualEdgeVector, "H_half");
    const Field3& hp = need(w.H_prev_half, FieldKind::DualEdgeVector, "H_prev_half");
    const Field3 hm = averaged(h, hp);
    const Field3 ch = apply_material(StarOp::B_inv, apply_diff(DiffOp::R, e), mat);
    return inner(FieldKind::EdgeVector, e, e, mat) -
           q * inner(FieldKind::DualEdgeVector, ch, ch, mat) +
           inner(FieldKind::DualEdgeVector, hm, hm, mat);
}

std::pair<double, double> divergence_diagnostics(const MaxwellState& s) {
    const Material mat = maxwell_material(s.eps, s.mu);
    Field3 de = apply_diff(DiffOp::Dstar, apply_material(StarOp::A, s.E, mat));
    Field3 dh = apply_diff(DiffOp::D, apply_material(StarOp::B, s.H_half, mat));
    add_scaled(de, -1.0, s.div_e0);
    add_scaled(dh, -1.0, s.div_h0);
    return {max_abs(de), max_abs(dh)};
}

double cfl_estimate(const Field3& eps, const Field3& mu, const GridSpec3& grid,
                    double tol) {
    check_lattices(eps, mu, grid);
    const Material mat = maxwell_material(eps, mu);
    const double nrm = operator_norm_estimate(SecondOrderOp::curlcurl_C, grid, mat, tol);
    if (!(nrm > 0.0))
        throw std::invalid_argument("cfl_estimate: degenerate operator norm");
    return 2.0 / std::sqrt(nrm);
}

}  // namespace mimetic
