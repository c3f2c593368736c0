#pragma once

// Data-parallel inner loops shared by the planner (bitset states), the scene
// model (packed segmentation masks) and the text pipeline (embeddings).
//
// Every kernel has a scalar reference implementation. Vectorized variants are
// compiled into separate translation units and selected once at runtime from
// the CPU feature set. Setting SYMGOAL_FORCE_SCALAR=1 in the environment pins
// the scalar table.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "symgoal/simd/kernel_table.hpp"

namespace symgoal::simd {

std::string_view isa_name(Isa isa);

const KernelTable& scalar_kernels();

// Null when the binary was built without the AVX2 translation unit or the
// running CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Table chosen at first use; stable for the lifetime of the process.
const KernelTable& active_kernels();

bool cpu_supports_avx2();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline MaskCounts mask_counts(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return active_kernels().mask_counts(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline std::uint64_t popcount(std::span<const std::uint64_t> a) {
  return active_kernels().popcount(a.data(), a.size());
}

}  // namespace symgoal::simd
