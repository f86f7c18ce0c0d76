#include "mimetic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mimetic {

void validate(const GridSpec3& g) {
    if (g.nx < 2 || g.ny < 2 || g.nz < 2)
        throw std::invalid_argument("grid counts must be >= 2 per axis");
    if (!(g.dx > 0.0) || !(g.dy > 0.0) || !(g.dz > 0.0))
        throw std::invalid_argument("grid spacings must be positive");
}

bool same_grid(const GridSpec3& a, const GridSpec3& b) {
    return a.nx == b.nx && a.ny == b.ny && a.nz == b.nz && a.dx == b.dx &&
           a.dy == b.dy && a.dz == b.dz;
}

double cell_volume(const GridSpec3& g) { return g.dx * g.dy * g.dz; }

double min_spacing(const GridSpec3& g) {
    return std::min(g.dx, std::min(g.dy, g.dz));
}

int components(FieldKind k) {
    switch (k) {
        case FieldKind::NodeScalar:
        case FieldKind::CellScalar:
        case FieldKind::DualCellScalar:
        case FieldKind::DualNodeScalar:
            return 1;
        default:
            return 3;
    }
}

int dimension_exponent(FieldKind k) {
    switch (k) {
        case FieldKind::NodeScalar:
        case FieldKind::DualNodeScalar:
            return 0;
        case FieldKind::EdgeVector:
        case FieldKind::DualEdgeVector:
            return 1;
        case FieldKind::FaceVector:
        case FieldKind::DualFaceVector:
            return 2;
        case FieldKind::CellScalar:
        case FieldKind::DualCellScalar:
            return 3;
    }
    return 0;
}

bool is_dual(FieldKind k) {
    switch (k) {
        case FieldKind::DualCellScalar:
        case FieldKind::DualFaceVector:
        case FieldKind::DualEdgeVector:
        case FieldKind::DualNodeScalar:
            return true;
        default:
            return false;
    }
}

const char* kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::NodeScalar: return "node_scalar";
        case FieldKind::EdgeVector: return "edge_vector";
        case FieldKind::FaceVector: return "face_vector";
        case FieldKind::CellScalar: return "cell_scalar";
        case FieldKind::DualCellScalar: return "dual_cell_scalar";
        case FieldKind::DualFaceVector: return "dual_face_vector";
        case FieldKind::DualEdgeVector: return "dual_edge_vector";
        case FieldKind::DualNodeScalar: return "dual_node_scalar";
    }
    return "unknown";
}

namespace {

std::array<double, 3> edge_like_offset(int comp) {
    std::array<double, 3> o{0.0, 0.0, 0.0};
    o[static_cast<std::size_t>(comp)] = 0.5;
    return o;
}

std::array<double, 3> face_like_offset(int comp) {
    std::array<double, 3> o{0.5, 0.5, 0.5};
    o[static_cast<std::size_t>(comp)] = 0.0;
    return o;
}

}  // namespace

std::array<double, 3> site_offset(FieldKind k, int comp) {
    if (comp < 0 || comp >= components(k))
        throw std::invalid_argument("site_offset: component out of range");
    switch (k) {
        case FieldKind::NodeScalar:
        case FieldKind::DualCellScalar:
            return {0.0, 0.0, 0.0};
        case FieldKind::CellScalar:
        case FieldKind::DualNodeScalar:
            return {0.5, 0.5, 0.5};
        case FieldKind::EdgeVector:
        case FieldKind::DualFaceVector:
            return edge_like_offset(comp);
        case FieldKind::FaceVector:
        case FieldKind::DualEdgeVector:
            return face_like_offset(comp);
    }
    return {0.0, 0.0, 0.0};
}

std::array<double, 3> site_position(const GridSpec3& g, FieldKind k, int comp,
                                    long i, long j, long k_idx) {
    const std::array<double, 3> off = site_offset(k, comp);
    return {(static_cast<double>(i) + off[0]) * g.dx,
            (static_cast<double>(j) + off[1]) * g.dy,
            (static_cast<double>(k_idx) + off[2]) * g.dz};
}

Field3::Field3(FieldKind kind, const GridSpec3& grid) : kind_(kind), grid_(grid) {
    validate(grid);
    data_.assign(static_cast<std::size_t>(components(kind) * per_component()), 0.0);
}

Field3 make_random_field(FieldKind kind, const GridSpec3& grid, std::uint64_t seed) {
    Field3 f(kind, grid);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : f.data()) v = dist(rng);
    return f;
}

void add_scaled(Field3& y, double alpha, const Field3& x) {
    if (y.kind() != x.kind() || !same_grid(y.grid(), x.grid()))
        throw std::invalid_argument("add_scaled: kind or grid mismatch");
    for (std::size_t n = 0; n < y.data().size(); ++n)
        y.data()[n] += alpha * x.data()[n];
}

Field3 averaged(const Field3& f, const Field3& g) {
    if (f.kind() != g.kind() || !same_grid(f.grid(), g.grid()))
        throw std::invalid_argument("averaged: kind or grid mismatch");
    Field3 out = f;
    for (std::size_t n = 0; n < out.data().size(); ++n)
        out.data()[n] = 0.5 * (f.data()[n] + g.data()[n]);
    return out;
}

double max_abs(const Field3& f) {
    double m = 0.0;
    for (double v : f.data()) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const Field3& f) {
    for (double v : f.data())
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace mimetic
