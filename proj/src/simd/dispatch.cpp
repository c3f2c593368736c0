#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "symgoal/simd/kernels.hpp"

namespace symgoal::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_supports_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(SYMGOAL_HAVE_AVX2_TU)
  if (cpu_supports_avx2()) return &detail::avx2_table();
#endif
  return nullptr;
}

namespace {

const KernelTable& select_kernels() {
  if (const char* force = std::getenv("SYMGOAL_FORCE_SCALAR"); force && std::string(force) != "0") {
    return scalar_kernels();
  }
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace symgoal::simd
