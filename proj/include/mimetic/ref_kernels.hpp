#pragma once

#include "mimetic/material.hpp"
#include "mimetic/operators.hpp"

namespace mimetic::ref {

/// Plain serial implementations of the stencil and star kernels, kept as the
/// comparison baseline for the parallel versions. Results are bitwise equal
/// to mimetic::apply_diff / mimetic::apply_material at any thread count.
Field3 apply_diff(DiffOp op, const Field3& f);
Field3 apply_material(StarOp which, const Field3& f, const Material& mat);

}  // namespace mimetic::ref
