#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagp {

// Global worker cap shared by all OpenMP kernels. 0 means "use the OpenMP
// default". Every parallel kernel in the library has a serial twin in
// flagp::serial used as the reference implementation in tests and benchmarks.
int max_threads();
void set_max_threads(int n);

inline int effective_threads() {
#ifdef _OPENMP
  int cap = max_threads();
  int hw = omp_get_max_threads();
  return (cap > 0 && cap < hw) ? cap : hw;
#else
  return 1;
#endif
}

}  // namespace flagp
