#pragma once

#include <string>

#include "mimetic/grid.hpp"

namespace mimetic {

/// Writes one raw little-endian binary file of 64-bit floats per component,
/// row-major with x fastest, named <base>.c<comp>.f64, plus a JSON sidecar
/// <base>.c<comp>.json with fields
/// {kind, nx, ny, nz, dx, dy, dz, component, step, time}.
/// `base` may include a directory prefix; throws std::runtime_error on I/O
/// failure.
void write_snapshot(const Field3& f, const std::string& base, long step,
                    double time);

}  // namespace mimetic
