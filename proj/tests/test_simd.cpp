#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "symgoal/simd/kernels.hpp"
#include "symgoal/util/rng.hpp"

using namespace symgoal;
using namespace symgoal::simd;

namespace {

std::vector<std::uint64_t> words(Rng& rng, std::size_t n) {
  std::vector<std::uint64_t> out(n);
  for (auto& w : out) w = rng.next() & rng.next();
  return out;
}

std::vector<double> reals(Rng& rng, std::size_t n) {
  std::vector<double> out(n);
  for (auto& x : out) x = 2.0 * rng.unit() - 1.0;
  return out;
}

void check_equivalent(const KernelTable& ref, const KernelTable& vec) {
  Rng rng(17);
  for (std::size_t n = 0; n < 70; ++n) {
    CAPTURE(n);
    const auto a = words(rng, n), b = words(rng, n), c = words(rng, n);
    const auto mr = ref.mask_counts(a.data(), b.data(), n);
    const auto mv = vec.mask_counts(a.data(), b.data(), n);
    CHECK(mr.intersection == mv.intersection);
    CHECK(mr.union_count == mv.union_count);
    CHECK(ref.popcount(a.data(), n) == vec.popcount(a.data(), n));

    // Preconditions drawn from the state itself so that both outcomes occur.
    std::vector<std::uint64_t> pos(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = a[i] & b[i];
      neg[i] = ~a[i] & c[i];
      if (rng.chance(0.2)) pos[i] |= c[i];
    }
    CHECK(ref.satisfies(a.data(), pos.data(), neg.data(), n) == vec.satisfies(a.data(), pos.data(), neg.data(), n));
    CHECK(ref.count_unmet(a.data(), b.data(), c.data(), n) == vec.count_unmet(a.data(), b.data(), c.data(), n));

    std::vector<std::uint64_t> out_r(n), out_v(n);
    ref.apply(a.data(), b.data(), c.data(), out_r.data(), n);
    vec.apply(a.data(), b.data(), c.data(), out_v.data(), n);
    CHECK(out_r == out_v);

    const auto x = reals(rng, n * 3), y = reals(rng, n * 3);
    const double dr = ref.dot(x.data(), y.data(), x.size());
    const double dv = vec.dot(x.data(), y.data(), x.size());
    CHECK(std::abs(dr - dv) <= 1e-12 * (1.0 + std::abs(dr)));
  }
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar kernels agree with naive definitions") {
    const KernelTable& k = scalar_kernels();
    CHECK(k.isa == Isa::Scalar);
    const std::vector<std::uint64_t> state = {0b1011, 0};
    const std::vector<std::uint64_t> pos = {0b0011, 0};
    const std::vector<std::uint64_t> neg = {0b0100, 1};
    CHECK(k.satisfies(state.data(), pos.data(), neg.data(), 2));
    CHECK(k.count_unmet(state.data(), neg.data(), pos.data(), 2) == 1 + 1 + 2);
    std::vector<std::uint64_t> out(2);
    k.apply(state.data(), neg.data(), pos.data(), out.data(), 2);
    CHECK(out == std::vector<std::uint64_t>{0b1100, 1});
    const double a[] = {1, 2, 3}, b[] = {4, 5, 6};
    CHECK(k.dot(a, b, 3) == 32.0);
    CHECK(k.popcount(state.data(), 2) == 3);
  }

  TEST_CASE("vectorized kernels match the scalar reference") {
    const KernelTable* avx2 = avx2_kernels();
    if (!avx2) {
      MESSAGE("AVX2 kernels unavailable on this build or CPU; equivalence check skipped");
      return;
    }
    CHECK(avx2->isa == Isa::Avx2);
    check_equivalent(scalar_kernels(), *avx2);
  }

  TEST_CASE("active table honours the scalar override") {
    const char* force = std::getenv("SYMGOAL_FORCE_SCALAR");
    if (force && std::string(force) == "1") {
      CHECK(active_kernels().isa == Isa::Scalar);
    } else if (avx2_kernels()) {
      CHECK(active_kernels().isa == Isa::Avx2);
    } else {
      CHECK(active_kernels().isa == Isa::Scalar);
    }
    CHECK_FALSE(isa_name(active_kernels().isa).empty());
  }
}
