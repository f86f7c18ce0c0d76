#pragma once

#include <cstdint>

#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"

namespace mimetic {

/// First-order difference operators of the primal chain (G, R, D) and the
/// dual chain (Gstar, Rstar, Dstar). Primal operators difference forward,
/// dual operators backward; indices wrap periodically.
enum class DiffOp { G, R, D, Gstar, Rstar, Dstar };

FieldKind diff_domain(DiffOp op);
FieldKind diff_codomain(DiffOp op);
const char* diff_name(DiffOp op);

/// Applies the stencil of `op` to `f`. Throws std::invalid_argument when
/// f.kind is not the operator's domain.
Field3 apply_diff(DiffOp op, const Field3& f);

/// Composite second-order operators, each a chain of one primal and one dual
/// first-order operator with material maps in between:
///   laplacian_P: node scalars,   a_inv . Dstar . A . G
///   laplacian_V: cell scalars,   D . B . Gstar . b_inv
///   curlcurl_C:  edge vectors,   A_inv . Rstar . B_inv . R
///   curlcurl_S:  face vectors,   R . A_inv . Rstar . B_inv
/// The laplacians are negative semidefinite and the curl-curls positive
/// semidefinite in their weighted inner products.
enum class SecondOrderOp { laplacian_P, laplacian_V, curlcurl_C, curlcurl_S };

FieldKind second_order_domain(SecondOrderOp op);
const char* second_order_name(SecondOrderOp op);

Field3 second_order(SecondOrderOp op, const Material& mat, const Field3& f);

/// Power-iteration estimate of the composite's norm in the weighted inner
/// product of its domain space. Deterministic for a fixed seed; tol is the
/// relative eigenvalue tolerance.
double operator_norm_estimate(SecondOrderOp op, const GridSpec3& grid,
                              const Material& mat, double tol,
                              std::uint64_t seed = 12345);

}  // namespace mimetic
