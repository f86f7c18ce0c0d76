#pragma once

#include <string>

#include "mimetic/config.hpp"

namespace mimetic {

/// Executes the configured scenario: builds the initial state, steps it,
/// records the conserved-quantity ledger (one row per integer step,
/// including step 0), writes out_dir/ledger.csv plus any requested
/// snapshots, and prints a drift summary unless quiet.
///
/// Returns the process exit status: 0 on success, 1 on an invalid
/// configuration, 2 when the scheme went unstable (the step is printed),
/// 3 on an I/O failure.
int run_scenario(const RunConfig& rc, const std::string& out_dir, bool quiet);

}  // namespace mimetic
