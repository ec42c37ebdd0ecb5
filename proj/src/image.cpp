#include "movrec/image.hpp"

#include <algorithm>
#include <cmath>

#include "movrec/error.hpp"

namespace movrec {

bool box_within_frame(const BoundingBox& box, int frame_w, int frame_h) {
  return box.w >= 1 && box.h >= 1 && box.x >= 0 && box.y >= 0 &&
         box.x + box.w <= frame_w && box.y + box.h <= frame_h;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.x + a.w, b.x + b.w);
  const int y1 = std::min(a.y + a.h, b.y + b.h);
  if (x1 <= x0 || y1 <= y0) return 0.0;
  const double inter = static_cast<double>(x1 - x0) * (y1 - y0);
  const double uni = static_cast<double>(a.w) * a.h + static_cast<double>(b.w) * b.h - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

BoundingBox pad_box(const BoundingBox& box, double frac, int frame_w, int frame_h) {
  const int px = static_cast<int>(std::lround(box.w * frac));
  const int py = static_cast<int>(std::lround(box.h * frac));
  const int x0 = std::max(0, box.x - px);
  const int y0 = std::max(0, box.y - py);
  const int x1 = std::min(frame_w, box.x + box.w + px);
  const int y1 = std::min(frame_h, box.y + box.h + py);
  return BoundingBox{x0, y0, x1 - x0, y1 - y0};
}

GrayFrame crop(const GrayFrame& frame, const BoundingBox& box) {
  if (!box_within_frame(box, frame.width, frame.height)) {
    throw Error(ErrorCode::BoxOutOfBounds, "crop box outside frame");
  }
  GrayFrame out(box.w, box.h);
  for (int y = 0; y < box.h; ++y) {
    for (int x = 0; x < box.w; ++x) {
      out.at(x, y) = frame.at(box.x + x, box.y + y);
    }
  }
  return out;
}

GrayFrame resize_bilinear(const GrayFrame& frame, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1 || frame.width < 1 || frame.height < 1) {
    throw Error(ErrorCode::DimensionZero, "resize requires nonempty images");
  }
  GrayFrame out(out_w, out_h);
  const double sx = static_cast<double>(frame.width) / out_w;
  const double sy = static_cast<double>(frame.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    // pixel-center sampling
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(frame.height - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, frame.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(frame.width - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, frame.width - 1);
      const double wx = fx - x0;
      const double top = frame.at(x0, y0) * (1.0 - wx) + frame.at(x1, y0) * wx;
      const double bot = frame.at(x0, y1) * (1.0 - wx) + frame.at(x1, y1) * wx;
      out.at(x, y) = top * (1.0 - wy) + bot * wy;
    }
  }
  return out;
}

}  // namespace movrec
