#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mimetic/grid.hpp"
#include "mimetic/material.hpp"

namespace mimetic {

/// Relative residuals of the three duality pairings on seeded random fields:
///   grad: <A G s, n*>_F* + <s, a^-1 D* n*>_N  = 0
///   curl: <B^-1 R t, t*>_E* - <t, A^-1 R* t*>_E = 0
///   div:  <b^-1 D n, s*>_N* + <n, B G* s*>_F  = 0
/// The gradient and divergence pairs are anti-adjoint, the curl pair is
/// adjoint; each residual is normalized by the larger pairing magnitude.
struct AdjointReport {
    double grad_residual = 0.0;
    double curl_residual = 0.0;
    double div_residual = 0.0;

    double max_residual() const;
};

AdjointReport check_adjoints(const GridSpec3& grid, const Material& mat,
                             std::uint64_t seed);

/// Residuals of the exact-sequence identities: gradients of constants vanish,
/// curls of gradients vanish, divergences of curls vanish, on both chains.
struct ExactnessReport {
    struct Item {
        std::string name;
        double residual;
        double bound;
    };
    std::vector<Item> items;

    bool all_within() const;
};

ExactnessReport check_exactness(const GridSpec3& grid, std::uint64_t seed);

}  // namespace mimetic
