#pragma once

// OpenMP-backed loop helper. Every parallel loop in the library writes
// disjoint elements, so serial and parallel execution produce bit-identical
// results; tests assert this.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgeproc {

template <class F>
void parallel_for(int n, bool parallel, F&& body) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace edgeproc
