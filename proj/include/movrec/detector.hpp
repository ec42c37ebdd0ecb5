#ifndef MOVREC_DETECTOR_HPP_
#define MOVREC_DETECTOR_HPP_

#include <cstdint>
#include <vector>

#include "movrec/image.hpp"

namespace movrec {

struct Detection {
  BoundingBox box;
  double cx = 0.0;  // centroid, sub-pixel
  double cy = 0.0;
  int area = 0;     // foreground pixel count after morphology
};

struct DetectorParams {
  double diff_threshold = 0.12;
  int min_area = 60;
  double alpha = 0.02;  // background learning rate

  bool operator==(const DetectorParams&) const = default;
};

// Running-average background update: (1-alpha)*bg + alpha*frame.
GrayFrame update_background(const GrayFrame& bg, const GrayFrame& frame, double alpha);

// |frame - bg| > diff_threshold, one pass of 3x3 opening (8-neighborhood),
// 8-connected components, components under min_area dropped. Detections come
// back sorted by (box.y, box.x).
std::vector<Detection> detect(const GrayFrame& frame, const GrayFrame& bg,
                              double diff_threshold, int min_area);

// Morphology kernels exposed for the serial/parallel equivalence tests and
// the benchmark. Masks are 0/1 bytes, row-major; out-of-frame counts as
// background for erosion.
std::vector<std::uint8_t> morph_open(const std::vector<std::uint8_t>& mask, int w, int h);
std::vector<std::uint8_t> morph_open_serial(const std::vector<std::uint8_t>& mask, int w, int h);

}  // namespace movrec

#endif  // MOVREC_DETECTOR_HPP_
