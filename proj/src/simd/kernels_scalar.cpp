#include <bit>

#include "symgoal/simd/kernels.hpp"

namespace symgoal::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

MaskCounts mask_counts_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  MaskCounts counts;
  for (std::size_t i = 0; i < words; ++i) {
    counts.intersection += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    counts.union_count += static_cast<std::uint64_t>(std::popcount(a[i] | b[i]));
  }
  return counts;
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

bool satisfies_scalar(const std::uint64_t* state, const std::uint64_t* pos, const std::uint64_t* neg,
                      std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((pos[i] & ~state[i]) != 0 || (neg[i] & state[i]) != 0) return false;
  }
  return true;
}

std::uint64_t count_unmet_scalar(const std::uint64_t* state, const std::uint64_t* pos,
                                 const std::uint64_t* neg, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(pos[i] & ~state[i]));
    total += static_cast<std::uint64_t>(std::popcount(neg[i] & state[i]));
  }
  return total;
}

void apply_scalar(const std::uint64_t* state, const std::uint64_t* add, const std::uint64_t* del,
                  std::uint64_t* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = (state[i] & ~del[i]) | add[i];
}

constexpr KernelTable kScalarTable{
    Isa::Scalar,     dot_scalar,          mask_counts_scalar, popcount_scalar,
    satisfies_scalar, count_unmet_scalar, apply_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace symgoal::simd
