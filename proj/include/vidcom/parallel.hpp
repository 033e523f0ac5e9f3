#pragma once

namespace vidcom {

/// Thread count for the OpenMP kernels. 0 means "auto" (omp_get_max_threads).
/// Every kernel produces bit-identical output for any thread count.
struct Execution {
    int threads = 0;

    int resolved_threads() const noexcept;
};

bool openmp_enabled() noexcept;

}  // namespace vidcom
