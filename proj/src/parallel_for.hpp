#pragma once

#include "mimetic/threads.hpp"

namespace mimetic {

/// Runs body(k, j) over the nz*ny slab rows, in parallel when more than one
/// thread is configured. Each row must write only its own output elements so
/// results are bitwise independent of the thread count.
template <class F>
void parallel_for_slabs(long nz, long ny, F&& body) {
    const int nt = thread_count();
#ifdef _OPENMP
    if (nt > 1) {
#pragma omp parallel for collapse(2) num_threads(nt) schedule(static)
        for (long k = 0; k < nz; ++k)
            for (long j = 0; j < ny; ++j) body(k, j);
        return;
    }
#endif
    (void)nt;
    for (long k = 0; k < nz; ++k)
        for (long j = 0; j < ny; ++j) body(k, j);
}

/// Elementwise variant over a flat range.
template <class F>
void parallel_for_elems(long n, F&& body) {
    const int nt = thread_count();
#ifdef _OPENMP
    if (nt > 1) {
#pragma omp parallel for num_threads(nt) schedule(static)
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    (void)nt;
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace mimetic
