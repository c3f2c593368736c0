// AVX2 variants. This file is compiled with -mavx2 -mpopcnt and is only
// reached through the dispatch table after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace symgoal::simd::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

// Nibble lookup popcount (Mula et al.), accumulated per 64-bit lane.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

MaskCounts mask_counts_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i inter = _mm256_setzero_si256();
  __m256i uni = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = load(a + i);
    __m256i vb = load(b + i);
    inter = _mm256_add_epi64(inter, popcount_epi64(_mm256_and_si256(va, vb)));
    uni = _mm256_add_epi64(uni, popcount_epi64(_mm256_or_si256(va, vb)));
  }
  MaskCounts counts{hsum_epi64(inter), hsum_epi64(uni)};
  for (; i < words; ++i) {
    counts.intersection += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    counts.union_count += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] | b[i]));
  }
  return counts;
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount_epi64(load(a + i)));
  std::uint64_t total = hsum_epi64(acc);
  for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
  return total;
}

bool satisfies_avx2(const std::uint64_t* state, const std::uint64_t* pos, const std::uint64_t* neg,
                    std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i s = load(state + i);
    __m256i missing = _mm256_andnot_si256(s, load(pos + i));
    __m256i violated = _mm256_and_si256(s, load(neg + i));
    if (!_mm256_testz_si256(_mm256_or_si256(missing, violated), _mm256_set1_epi64x(-1))) return false;
  }
  for (; i < words; ++i) {
    if ((pos[i] & ~state[i]) != 0 || (neg[i] & state[i]) != 0) return false;
  }
  return true;
}

std::uint64_t count_unmet_avx2(const std::uint64_t* state, const std::uint64_t* pos, const std::uint64_t* neg,
                               std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i s = load(state + i);
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_andnot_si256(s, load(pos + i))));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(s, load(neg + i))));
  }
  std::uint64_t total = hsum_epi64(acc);
  for (; i < words; ++i) {
    total += static_cast<std::uint64_t>(_mm_popcnt_u64(pos[i] & ~state[i]));
    total += static_cast<std::uint64_t>(_mm_popcnt_u64(neg[i] & state[i]));
  }
  return total;
}

void apply_avx2(const std::uint64_t* state, const std::uint64_t* add, const std::uint64_t* del, std::uint64_t* out,
                std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i kept = _mm256_andnot_si256(load(del + i), load(state + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(kept, load(add + i)));
  }
  for (; i < words; ++i) out[i] = (state[i] & ~del[i]) | add[i];
}

constexpr KernelTable kAvx2Table{
    Isa::Avx2,     dot_avx2,          mask_counts_avx2, popcount_avx2,
    satisfies_avx2, count_unmet_avx2, apply_avx2,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2Table; }

}  // namespace symgoal::simd::detail
