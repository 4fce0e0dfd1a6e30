#pragma once

#include <omp.h>

namespace lcslab {

/// Thread count for a parallel region: `workers` when positive, otherwise
/// the OpenMP default (OMP_NUM_THREADS or the core count).
inline int resolve_workers(int workers) noexcept { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace lcslab
