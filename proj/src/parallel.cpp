#include "vidcom/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vidcom {

int Execution::resolved_threads() const noexcept {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace vidcom
