#include "mimetic/checks.hpp"

#include <algorithm>
#include <cmath>

#include "mimetic/inner.hpp"
#include "mimetic/operators.hpp"

namespace mimetic {

double AdjointReport::max_residual() const {
    return std::max(grad_residual, std::max(curl_residual, div_residual));
}

namespace {

double relative(double lhs, double rhs, double combined) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(combined) / scale;
}

}  // namespace

AdjointReport check_adjoints(const GridSpec3& grid, const Material& mat,
                             std::uint64_t seed) {
    validate(grid);
    validate(mat);
    AdjointReport rep;

    {
        const Field3 s = make_random_field(FieldKind::NodeScalar, grid, seed);
        const Field3 nd = make_random_field(FieldKind::DualFaceVector, grid, seed + 1);
        const double lhs = inner(FieldKind::DualFaceVector,
                                 apply_material(StarOp::A, apply_diff(DiffOp::G, s), mat),
                                 nd, mat);
        const double rhs = inner(FieldKind::NodeScalar, s,
                                 apply_material(StarOp::a_inv,
                                                apply_diff(DiffOp::Dstar, nd), mat),
                                 mat);
        rep.grad_residual = relative(lhs, rhs, lhs + rhs);
    }
    {
        const Field3 t = make_random_field(FieldKind::EdgeVector, grid, seed + 2);
        const Field3 td = make_random_field(FieldKind::DualEdgeVector, grid, seed + 3);
        const double lhs = inner(FieldKind::DualEdgeVector,
                                 apply_material(StarOp::B_inv, apply_diff(DiffOp::R, t), mat),
                                 td, mat);
        const double rhs = inner(FieldKind::EdgeVector, t,
                                 apply_material(StarOp::A_inv,
                                                apply_diff(DiffOp::Rstar, td), mat),
                                 mat);
        rep.curl_residual = relative(lhs, rhs, lhs - rhs);
    }
    {
        const Field3 n = make_random_field(FieldKind::FaceVector, grid, seed + 4);
        const Field3 sd = make_random_field(FieldKind::DualNodeScalar, grid, seed + 5);
        const double lhs = inner(FieldKind::DualNodeScalar,
                                 apply_material(StarOp::b_inv, apply_diff(DiffOp::D, n), mat),
                                 sd, mat);
        const double rhs = inner(FieldKind::FaceVector, n,
                                 apply_material(StarOp::B,
                                                apply_diff(DiffOp::Gstar, sd), mat),
                                 mat);
        rep.div_residual = relative(lhs, rhs, lhs + rhs);
    }
    return rep;
}

bool ExactnessReport::all_within() const {
    for (const Item& it : items)
        if (!(it.residual <= it.bound)) return false;
    return !items.empty();
}

ExactnessReport check_exactness(const GridSpec3& grid, std::uint64_t seed) {
    validate(grid);
    ExactnessReport rep;
    const double ms = min_spacing(grid);

    auto push = [&rep](std::string name, double residual, double bound) {
        rep.items.push_back({std::move(name), residual, bound});
    };

    {
        Field3 c(FieldKind::NodeScalar, grid);
        for (double& v : c.data()) v = 0.75;
        push("grad_of_constant", max_abs(apply_diff(DiffOp::G, c)), 0.0);
    }
    {
        Field3 c(FieldKind::DualNodeScalar, grid);
        for (double& v : c.data()) v = -1.25;
        push("dual_grad_of_constant", max_abs(apply_diff(DiffOp::Gstar, c)), 0.0);
    }

    {
        const Field3 s = make_random_field(FieldKind::NodeScalar, grid, seed);
        const double bound = 1e-13 * max_abs(s) / (ms * ms);
        push("curl_of_grad", max_abs(apply_diff(DiffOp::R, apply_diff(DiffOp::G, s))),
             bound);
    }
    {
        const Field3 t = make_random_field(FieldKind::EdgeVector, grid, seed + 1);
        const double bound = 1e-13 * max_abs(t) / (ms * ms);
        push("div_of_curl", max_abs(apply_diff(DiffOp::D, apply_diff(DiffOp::R, t))),
             bound);
    }
    {
        const Field3 s = make_random_field(FieldKind::DualNodeScalar, grid, seed + 2);
        const double bound = 1e-13 * max_abs(s) / (ms * ms);
        push("dual_curl_of_grad",
             max_abs(apply_diff(DiffOp::Rstar, apply_diff(DiffOp::Gstar, s))), bound);
    }
    {
        const Field3 t = make_random_field(FieldKind::DualEdgeVector, grid, seed + 3);
        const double bound = 1e-13 * max_abs(t) / (ms * ms);
        push("dual_div_of_curl",
             max_abs(apply_diff(DiffOp::Dstar, apply_diff(DiffOp::Rstar, t))), bound);
    }
    return rep;
}

}  // namespace mimetic
