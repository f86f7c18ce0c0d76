#pragma once

#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"

namespace mimetic {

/// Weighted inner product of the given space, times the cell volume.
///
/// Primal-domain spaces weight by the co-located material lattice (a on node
/// scalars, A on edge vectors, ...); the image spaces weight by its
/// reciprocal, so that every star map is an isometry onto its codomain.
/// Summation is sequential in a fixed order, making results bit-reproducible
/// and symmetric in the two arguments.
double inner(FieldKind space, const Field3& f1, const Field3& f2,
             const Material& mat);

}  // namespace mimetic
