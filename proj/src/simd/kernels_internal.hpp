#pragma once

#include "symgoal/simd/kernel_table.hpp"

namespace symgoal::simd::detail {

#if defined(SYMGOAL_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif

}  // namespace symgoal::simd::detail
