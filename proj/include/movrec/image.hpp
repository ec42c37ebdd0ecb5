#ifndef MOVREC_IMAGE_HPP_
#define MOVREC_IMAGE_HPP_

#include <cstddef>
#include <vector>

namespace movrec {

// Row-major grayscale buffer. Pixel values are [0,1] at the file boundary;
// intermediate processing stages may hold values outside that range.
struct GrayFrame {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  GrayFrame() = default;
  GrayFrame(int w, int h, double fill = 0.0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return pixels.size(); }
};

struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const BoundingBox&) const = default;
};

bool box_within_frame(const BoundingBox& box, int frame_w, int frame_h);

// Zero-area overlap yields 0.
double iou(const BoundingBox& a, const BoundingBox& b);

// Grows the box by frac*w / frac*h per side (rounded), clamped to the frame.
BoundingBox pad_box(const BoundingBox& box, double frac, int frame_w, int frame_h);

GrayFrame crop(const GrayFrame& frame, const BoundingBox& box);

GrayFrame resize_bilinear(const GrayFrame& frame, int out_w, int out_h);

}  // namespace movrec

#endif  // MOVREC_IMAGE_HPP_
