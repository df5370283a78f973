#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sl2pf {
namespace par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline bool enabled() { return max_threads() > 1; }

// Parallel index loop over [0, n). fn must be safe to run concurrently on
// distinct indices; results land in caller-owned slots so merge order is the
// caller's index order.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, bool parallel = true) {
#ifdef _OPENMP
    if (parallel && n > 1 && max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace par
}  // namespace sl2pf
