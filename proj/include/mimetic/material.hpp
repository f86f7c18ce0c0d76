#pragma once

#include <cstdint>
#include <functional>

#include "mimetic/grid.hpp"

namespace mimetic {

/// Pointwise positive material weights, one lattice per star map.
///
/// a sits at nodes, b at cell centers, A on the three edge-component sites,
/// B on the three face-component sites. The Field3 kind tags record the
/// siting only; validate() checks strict positivity.
struct Material {
    Field3 a;
    Field3 b;
    Field3 A;
    Field3 B;
};

/// Throws std::invalid_argument unless every lattice entry is > 0 and all
/// four lattices share one grid with the expected siting.
void validate(const Material& m);

Material unit_material(const GridSpec3& g);

/// Seeded uniform values in [lo, hi] on every lattice.
Material random_material(const GridSpec3& g, std::uint64_t seed, double lo = 0.5,
                         double hi = 2.0);

using ScalarFn = std::function<double(double, double, double)>;
using ComponentFn = std::function<double(int, double, double, double)>;

/// Samples analytic coefficient functions at the staggered sites; no
/// averaging is applied.
Material sample_material(const GridSpec3& g, const ScalarFn& a_fn,
                         const ScalarFn& b_fn, const ComponentFn& A_fn,
                         const ComponentFn& B_fn);

/// The eight pointwise star multiplications between primal and dual kinds.
enum class StarOp { a, b, A, B, a_inv, b_inv, A_inv, B_inv };

FieldKind star_domain(StarOp op);
FieldKind star_codomain(StarOp op);
const char* star_name(StarOp op);

/// Pointwise product (or quotient, for the inverse maps) with the matching
/// material lattice. The result carries the codomain kind; values are
/// computed at the shared co-located sites.
Field3 apply_material(StarOp which, const Field3& f, const Material& mat);

}  // namespace mimetic
