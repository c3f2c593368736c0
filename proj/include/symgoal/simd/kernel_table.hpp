#pragma once

// Plain function-pointer table; kept free of inline code so that the
// vectorized translation units can include it without emitting ISA-specific
// copies of shared inline functions.

#include <cstddef>
#include <cstdint>

namespace symgoal::simd {

enum class Isa { Scalar, Avx2 };

struct MaskCounts {
  std::uint64_t intersection = 0;
  std::uint64_t union_count = 0;
};

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // popcount(a & b), popcount(a | b)
  MaskCounts (*mask_counts)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t words);
  // (pos & ~state) == 0 && (neg & state) == 0
  bool (*satisfies)(const std::uint64_t* state, const std::uint64_t* pos, const std::uint64_t* neg,
                    std::size_t words);
  // popcount(pos & ~state) + popcount(neg & state)
  std::uint64_t (*count_unmet)(const std::uint64_t* state, const std::uint64_t* pos,
                               const std::uint64_t* neg, std::size_t words);
  // out = (state & ~del) | add
  void (*apply)(const std::uint64_t* state, const std::uint64_t* add, const std::uint64_t* del,
                std::uint64_t* out, std::size_t words);
};

}  // namespace symgoal::simd
