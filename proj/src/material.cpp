#include "mimetic/material.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "parallel_for.hpp"

namespace mimetic {

namespace {

void check_lattice(const Field3& f, FieldKind kind, const GridSpec3& g,
                   const char* name) {
    if (f.kind() != kind || !same_grid(f.grid(), g))
        throw std::invalid_argument(std::string("material lattice ") + name +
                                    " has the wrong siting or grid");
    for (double v : f.data())
        if (!(v > 0.0))
            throw std::invalid_argument(std::string("material lattice ") + name +
                                        " must be strictly positive");
}

}  // namespace

void validate(const Material& m) {
    const GridSpec3& g = m.a.grid();
    check_lattice(m.a, FieldKind::NodeScalar, g, "a");
    check_lattice(m.b, FieldKind::CellScalar, g, "b");
    check_lattice(m.A, FieldKind::EdgeVector, g, "A");
    check_lattice(m.B, FieldKind::FaceVector, g, "B");
}

Material unit_material(const GridSpec3& g) {
    Material m;
    m.a = Field3(FieldKind::NodeScalar, g);
    m.b = Field3(FieldKind::CellScalar, g);
    m.A = Field3(FieldKind::EdgeVector, g);
    m.B = Field3(FieldKind::FaceVector, g);
    for (Field3* f : {&m.a, &m.b, &m.A, &m.B})
        for (double& v : f->data()) v = 1.0;
    return m;
}

Material random_material(const GridSpec3& g, std::uint64_t seed, double lo,
                         double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("random_material: need 0 < lo <= hi");
    Material m = unit_material(g);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    for (Field3* f : {&m.a, &m.b, &m.A, &m.B})
        for (double& v : f->data()) v = dist(rng);
    return m;
}

Material sample_material(const GridSpec3& g, const ScalarFn& a_fn,
                         const ScalarFn& b_fn, const ComponentFn& A_fn,
                         const ComponentFn& B_fn) {
    Material m = unit_material(g);
    auto fill_scalar = [&](Field3& f, const ScalarFn& fn) {
        for (long k = 0; k < g.nz; ++k)
            for (long j = 0; j < g.ny; ++j)
                for (long i = 0; i < g.nx; ++i) {
                    const auto p = site_position(g, f.kind(), 0, i, j, k);
                    f.at(0, i, j, k) = fn(p[0], p[1], p[2]);
                }
    };
    auto fill_vector = [&](Field3& f, const ComponentFn& fn) {
        for (int c = 0; c < 3; ++c)
            for (long k = 0; k < g.nz; ++k)
                for (long j = 0; j < g.ny; ++j)
                    for (long i = 0; i < g.nx; ++i) {
                        const auto p = site_position(g, f.kind(), c, i, j, k);
                        f.at(c, i, j, k) = fn(c, p[0], p[1], p[2]);
                    }
    };
    fill_scalar(m.a, a_fn);
    fill_scalar(m.b, b_fn);
    fill_vector(m.A, A_fn);
    fill_vector(m.B, B_fn);
    validate(m);
    return m;
}

FieldKind star_domain(StarOp op) {
    switch (op) {
        case StarOp::a: return FieldKind::NodeScalar;
        case StarOp::b: return FieldKind::DualNodeScalar;
        case StarOp::A: return FieldKind::EdgeVector;
        case StarOp::B: return FieldKind::DualEdgeVector;
        case StarOp::a_inv: return FieldKind::DualCellScalar;
        case StarOp::b_inv: return FieldKind::CellScalar;
        case StarOp::A_inv: return FieldKind::DualFaceVector;
        case StarOp::B_inv: return FieldKind::FaceVector;
    }
    return FieldKind::NodeScalar;
}

FieldKind star_codomain(StarOp op) {
    switch (op) {
        case StarOp::a: return FieldKind::DualCellScalar;
        case StarOp::b: return FieldKind::CellScalar;
        case StarOp::A: return FieldKind::DualFaceVector;
        case StarOp::B: return FieldKind::FaceVector;
        case StarOp::a_inv: return FieldKind::NodeScalar;
        case StarOp::b_inv: return FieldKind::DualNodeScalar;
        case StarOp::A_inv: return FieldKind::EdgeVector;
        case StarOp::B_inv: return FieldKind::DualEdgeVector;
    }
    return FieldKind::NodeScalar;
}

const char* star_name(StarOp op) {
    switch (op) {
        case StarOp::a: return "a";
        case StarOp::b: return "b";
        case StarOp::A: return "A";
        case StarOp::B: return "B";
        case StarOp::a_inv: return "a_inv";
        case StarOp::b_inv: return "b_inv";
        case StarOp::A_inv: return "A_inv";
        case StarOp::B_inv: return "B_inv";
    }
    return "?";
}

Field3 apply_material(StarOp which, const Field3& f, const Material& mat) {
    if (f.kind() != star_domain(which))
        throw std::invalid_argument(std::string("apply_material: ") + star_name(which) +
                                    " does not accept kind " + kind_name(f.kind()));
    if (!same_grid(f.grid(), mat.a.grid()))
        throw std::invalid_argument("apply_material: field and material grids differ");

    const Field3* lattice = nullptr;
    bool invert = false;
    switch (which) {
        case StarOp::a: lattice = &mat.a; break;
        case StarOp::b: lattice = &mat.b; break;
        case StarOp::A: lattice = &mat.A; break;
        case StarOp::B: lattice = &mat.B; break;
        case StarOp::a_inv: lattice = &mat.a; invert = true; break;
        case StarOp::b_inv: lattice = &mat.b; invert = true; break;
        case StarOp::A_inv: lattice = &mat.A; invert = true; break;
        case StarOp::B_inv: lattice = &mat.B; invert = true; break;
    }

    Field3 out(star_codomain(which), f.grid());
    const long n = static_cast<long>(out.data().size());
    const double* src = f.data().data();
    const double* w = lattice->data().data();
    double* dst = out.data().data();
    if (invert) {
        parallel_for_elems(n, [=](long i) { dst[i] = src[i] / w[i]; });
    } else {
        parallel_for_elems(n, [=](long i) { dst[i] = src[i] * w[i]; });
    }
    return out;
}

}  // namespace mimetic
