#include "mimetic/inner.hpp"

#include <stdexcept>

namespace mimetic {

namespace {

struct Weight {
    const Field3* lattice;
    bool reciprocal;
};

Weight weight_for(FieldKind space, const Material& mat) {
    switch (space) {
        case FieldKind::NodeScalar: return {&mat.a, false};
        case FieldKind::EdgeVector: return {&mat.A, false};
        case FieldKind::FaceVector: return {&mat.B, true};
        case FieldKind::CellScalar: return {&mat.b, true};
        case FieldKind::DualCellScalar: return {&mat.a, true};
        case FieldKind::DualFaceVector: return {&mat.A, true};
        case FieldKind::DualEdgeVector: return {&mat.B, false};
        case FieldKind::DualNodeScalar: return {&mat.b, false};
    }
    return {&mat.a, false};
}

}  // namespace

double inner(FieldKind space, const Field3& f1, const Field3& f2,
             const Material& mat) {
    if (f1.kind() != space || f2.kind() != space)
        throw std::invalid_argument("inner: field kinds do not match the space");
    if (!same_grid(f1.grid(), f2.grid()) || !same_grid(f1.grid(), mat.a.grid()))
        throw std::invalid_argument("inner: grid mismatch");

    const Weight w = weight_for(space, mat);
    const std::vector<double>& x = f1.data();
    const std::vector<double>& y = f2.data();
    const std::vector<double>& wl = w.lattice->data();
    double acc = 0.0;
    if (w.reciprocal) {
        for (std::size_t n = 0; n < x.size(); ++n) acc += x[n] * y[n] / wl[n];
    } else {
        for (std::size_t n = 0; n < x.size(); ++n) acc += x[n] * y[n] * wl[n];
    }
    return acc * cell_volume(f1.grid());
}

}  // namespace mimetic
