#include "mimetic/scalarwave3d.hpp"

#include <cmath>
#include <stdexcept>

#include "mimetic/errors.hpp"
#include "mimetic/inner.hpp"
#include "mimetic/operators.hpp"

namespace mimetic {

namespace {

FieldKind u_kind(bool starred) {
    return starred ? FieldKind::DualNodeScalar : FieldKind::NodeScalar;
}

FieldKind v_kind(bool starred) {
    return starred ? FieldKind::FaceVector : FieldKind::DualFaceVector;
}

Field3 grad_chain(const Field3& u, const Material& mat, bool starred) {
    if (starred) return apply_material(StarOp::B, apply_diff(DiffOp::Gstar, u), mat);
    return apply_material(StarOp::A, apply_diff(DiffOp::G, u), mat);
}

Field3 div_chain(const Field3& v, const Material& mat, bool starred) {
    if (starred) return apply_material(StarOp::b_inv, apply_diff(DiffOp::D, v), mat);
    return apply_material(StarOp::a_inv, apply_diff(DiffOp::Dstar, v), mat);
}

const Field3& need(const Field3& f, FieldKind kind, const char* name) {
    if (f.data().empty() || f.kind() != kind)
        throw std::invalid_argument(std::string("scalar wave window lacks ") + name);
    return f;
}

}  // namespace

ScalarWaveState init_v_half(const Field3& u0, const Field3& v0,
                            const Material& mat, double dt) {
    bool starred;
    if (u0.kind() == FieldKind::NodeScalar)
        starred = false;
    else if (u0.kind() == FieldKind::DualNodeScalar)
        starred = true;
    else
        throw std::invalid_argument("init_v_half: u0 must be a node or dual node scalar");
    if (v0.kind() != v_kind(starred))
        throw std::invalid_argument("init_v_half: v0 kind does not match the scheme");
    if (!same_grid(u0.grid(), v0.grid()) || !same_grid(u0.grid(), mat.a.grid()))
        throw std::invalid_argument("init_v_half: grid mismatch");
    if (!(dt > 0.0)) throw std::invalid_argument("init_v_half: dt must be positive");

    ScalarWaveState s;
    s.u = u0;
    s.v_half = v0;
    add_scaled(s.v_half, 0.5 * dt, grad_chain(u0, mat, starred));
    s.mat = mat;
    s.dt = dt;
    s.starred = starred;
    return s;
}

ScalarWaveState leapfrog_step(const ScalarWaveState& s) {
    ScalarWaveState out = s;
    add_scaled(out.u, s.dt, div_chain(s.v_half, s.mat, s.starred));
    add_scaled(out.v_half, s.dt, grad_chain(out.u, s.mat, s.starred));
    out.n_step = s.n_step + 1;
    if (!all_finite(out.u) || !all_finite(out.v_half))
        throw instability_error("scalar wave leapfrog produced a non-finite value",
                                out.n_step);
    return out;
}

double conserved(const ScalarWaveWindow& w, WaveConserved kind) {
    const bool starred = !w.v_half.data().empty() &&
                         w.v_half.kind() == FieldKind::FaceVector;
    const FieldKind uk = u_kind(starred);
    const FieldKind vk = v_kind(starred);
    const double q = 0.25 * w.dt * w.dt;

    if (kind == WaveConserved::C_half) {
        const Field3& u = need(w.u, uk, "u");
        const Field3& un = need(w.u_next, uk, "u_next");
        const Field3& v = need(w.v_half, vk, "v_half");
        const Field3 um = averaged(un, u);
        const Field3 dv = div_chain(v, w.mat, starred);
        return inner(uk, um, um, w.mat) + inner(vk, v, v, w.mat) -
               q * inner(uk, dv, dv, w.mat);
    }
    const Field3& u = need(w.u, uk, "u");
    const Field3& v = need(w.v_half, vk, "v_half");
    const Field3& vp = need(w.v_prev_half, vk, "v_prev_half");
    const Field3 vm = averaged(v, vp);
    const Field3 gu = grad_chain(u, w.mat, starred);
    return inner(uk, u, u, w.mat) - q * inner(vk, gu, gu, w.mat) +
           inner(vk, vm, vm, w.mat);
}

double curl_diagnostic(const ScalarWaveState& s) {
    if (s.starred)
        return max_abs(apply_diff(DiffOp::Rstar,
                                  apply_material(StarOp::B_inv, s.v_half, s.mat)));
    return max_abs(apply_diff(DiffOp::R,
                              apply_material(StarOp::A_inv, s.v_half, s.mat)));
}

double dt_max_estimate(const GridSpec3& grid, const Material& mat, bool starred,
                       double tol) {
    const SecondOrderOp op =
        starred ? SecondOrderOp::laplacian_V : SecondOrderOp::laplacian_P;
    const double nrm = operator_norm_estimate(op, grid, mat, tol);
    if (!(nrm > 0.0))
        throw std::invalid_argument("dt_max_estimate: degenerate operator norm");
    return 2.0 / std::sqrt(nrm);
}

}  // namespace mimetic
