#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace symgoal::scene {

// Axis-aligned pixel box, half-open: covers x1 <= x < x2, y1 <= y < y2.
struct BoundingBox {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  bool valid() const { return x1 < x2 && y1 < y2; }
  double center_x() const { return 0.5 * (x1 + x2); }
  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Binary raster packed row-major into 64-bit words (bit i = pixel
// (i % width, i / width)). Padding bits past width*height stay zero.
class SegmentMask {
 public:
  SegmentMask() = default;
  SegmentMask(int width, int height);

  // Box approximation clipped to the raster.
  static SegmentMask from_box(int width, int height, const BoundingBox& box);
  // Alternating run lengths over the row-major pixel sequence, starting with
  // a run of zeros (which may be 0). Throws SchemaError when the runs do not
  // cover exactly width*height pixels.
  static SegmentMask from_rle(int width, int height, const std::vector<std::uint32_t>& counts);
  std::vector<std::uint32_t> to_rle() const;

  int width() const { return width_; }
  int height() const { return height_; }
  bool get(int x, int y) const;
  void set(int x, int y, bool value);
  std::uint64_t area() const;
  bool empty() const { return area() == 0; }
  std::span<const std::uint64_t> words() const { return bits_; }

  friend bool operator==(const SegmentMask&, const SegmentMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint64_t> bits_;
};

// |a & b| / |a | b|; 0 when both masks are empty. Throws DimensionMismatch
// for rasters of different size.
double iou(const SegmentMask& a, const SegmentMask& b);

}  // namespace symgoal::scene
