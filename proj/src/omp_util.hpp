#pragma once

#include <cstdint>

#define DJSIM_PRAGMA(x) _Pragma(#x)
#if DJSIM_USE_OPENMP
#include <omp.h>
#define DJSIM_OMP(x) DJSIM_PRAGMA(omp x)
#else
#define DJSIM_OMP(x)
#endif

namespace djsim::detail {

// Loops shorter than this run serially; thread startup dominates below it.
inline constexpr std::int64_t kParallelGrain = 1 << 12;

}  // namespace djsim::detail
