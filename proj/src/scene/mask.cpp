#include "symgoal/scene/mask.hpp"

#include <algorithm>

#include "symgoal/errors.hpp"
#include "symgoal/simd/kernels.hpp"

namespace symgoal::scene {

SegmentMask::SegmentMask(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw DomainError("negative mask size");
  const auto pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  bits_.assign((pixels + 63) / 64, 0);
}

SegmentMask SegmentMask::from_box(int width, int height, const BoundingBox& box) {
  SegmentMask mask(width, height);
  const int x1 = std::clamp(box.x1, 0, width), x2 = std::clamp(box.x2, 0, width);
  const int y1 = std::clamp(box.y1, 0, height), y2 = std::clamp(box.y2, 0, height);
  for (int y = y1; y < y2; ++y) {
    for (int x = x1; x < x2; ++x) mask.set(x, y, true);
  }
  return mask;
}

SegmentMask SegmentMask::from_rle(int width, int height, const std::vector<std::uint32_t>& counts) {
  SegmentMask mask(width, height);
  const auto pixels = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  std::uint64_t pos = 0;
  bool value = false;
  for (std::uint32_t run : counts) {
    if (pos + run > pixels) throw SchemaError("mask run-length encoding exceeds raster size");
    if (value) {
      for (std::uint64_t i = pos; i < pos + run; ++i) mask.bits_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    pos += run;
    value = !value;
  }
  if (pos != pixels) throw SchemaError("mask run-length encoding does not cover the raster");
  return mask;
}

std::vector<std::uint32_t> SegmentMask::to_rle() const {
  std::vector<std::uint32_t> counts;
  const auto pixels = static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(height_);
  bool value = false;
  std::uint32_t run = 0;
  for (std::uint64_t i = 0; i < pixels; ++i) {
    const bool bit = (bits_[i / 64] >> (i % 64)) & 1u;
    if (bit != value) {
      counts.push_back(run);
      run = 0;
      value = bit;
    }
    ++run;
  }
  counts.push_back(run);
  return counts;
}

bool SegmentMask::get(int x, int y) const {
  const auto i = static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  return (bits_[i / 64] >> (i % 64)) & 1u;
}

void SegmentMask::set(int x, int y, bool value) {
  const auto i = static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    bits_[i / 64] |= bit;
  } else {
    bits_[i / 64] &= ~bit;
  }
}

std::uint64_t SegmentMask::area() const { return simd::popcount(bits_); }

double iou(const SegmentMask& a, const SegmentMask& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatch(static_cast<std::size_t>(a.width()) * static_cast<std::size_t>(a.height()),
                            static_cast<std::size_t>(b.width()) * static_cast<std::size_t>(b.height()));
  }
  const simd::MaskCounts counts = simd::mask_counts(a.words(), b.words());
  if (counts.union_count == 0) return 0.0;
  return static_cast<double>(counts.intersection) / static_cast<double>(counts.union_count);
}

}  // namespace symgoal::scene
