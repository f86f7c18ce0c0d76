#pragma once

namespace mimetic {

/// Number of worker threads the 3D stencil kernels may use.  Initialized from
/// the MIMETIC_THREADS environment variable, defaulting to 1.  Kernel output
/// is bitwise independent of this value; it only affects wall time.
int thread_count();

/// Override the thread count for this process (values < 1 clamp to 1).
void set_thread_count(int n);

}  // namespace mimetic
