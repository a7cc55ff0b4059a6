#pragma once

#ifdef JBKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace jbkit {

// serial is the reference implementation every parallel kernel is tested
// against; parallel runs the same loop body under OpenMP.
enum class Exec { serial, parallel };

template <class Fn>
void par_for(Exec exec, long n, Fn&& body) {
#ifdef JBKIT_HAVE_OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (long i = 0; i < n; ++i) body(i);
}

}  // namespace jbkit
