#include "movrec/detector.hpp"

#include <algorithm>
#include <cmath>

#include "movrec/error.hpp"

namespace movrec {

namespace {

void check_same_size(const GrayFrame& a, const GrayFrame& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorCode::DimensionMismatch, "frame and background sizes differ");
  }
}

inline std::uint8_t erode_at(const std::vector<std::uint8_t>& m, int w, int h, int x, int y) {
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const int nx = x + dx;
      const int ny = y + dy;
      if (nx < 0 || ny < 0 || nx >= w || ny >= h) return 0;
      if (!m[static_cast<std::size_t>(ny) * w + nx]) return 0;
    }
  }
  return 1;
}

inline std::uint8_t dilate_at(const std::vector<std::uint8_t>& m, int w, int h, int x, int y) {
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const int nx = x + dx;
      const int ny = y + dy;
      if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
      if (m[static_cast<std::size_t>(ny) * w + nx]) return 1;
    }
  }
  return 0;
}

}  // namespace

GrayFrame update_background(const GrayFrame& bg, const GrayFrame& frame, double alpha) {
  check_same_size(bg, frame);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "alpha must be in (0, 1]");
  }
  GrayFrame out(bg.width, bg.height);
  for (std::size_t i = 0; i < bg.size(); ++i) {
    out.pixels[i] = (1.0 - alpha) * bg.pixels[i] + alpha * frame.pixels[i];
  }
  return out;
}

std::vector<std::uint8_t> morph_open(const std::vector<std::uint8_t>& mask, int w, int h) {
  std::vector<std::uint8_t> eroded(mask.size());
  std::vector<std::uint8_t> opened(mask.size());
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      eroded[static_cast<std::size_t>(y) * w + x] = erode_at(mask, w, h, x, y);
    }
  }
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      opened[static_cast<std::size_t>(y) * w + x] = dilate_at(eroded, w, h, x, y);
    }
  }
  return opened;
}

std::vector<std::uint8_t> morph_open_serial(const std::vector<std::uint8_t>& mask, int w, int h) {
  std::vector<std::uint8_t> eroded(mask.size());
  std::vector<std::uint8_t> opened(mask.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      eroded[static_cast<std::size_t>(y) * w + x] = erode_at(mask, w, h, x, y);
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      opened[static_cast<std::size_t>(y) * w + x] = dilate_at(eroded, w, h, x, y);
    }
  }
  return opened;
}

std::vector<Detection> detect(const GrayFrame& frame, const GrayFrame& bg,
                              double diff_threshold, int min_area) {
  check_same_size(frame, bg);
  if (!(diff_threshold > 0.0 && diff_threshold < 1.0)) {
    throw Error(ErrorCode::InvalidThreshold, "diff threshold must be in (0, 1)");
  }
  const int w = frame.width;
  const int h = frame.height;

  std::vector<std::uint8_t> mask(frame.size());
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      mask[i] = std::abs(frame.pixels[i] - bg.pixels[i]) > diff_threshold ? 1 : 0;
    }
  }
  mask = morph_open(mask, w, h);

  // 8-connected components, row-major scan with an explicit stack.
  std::vector<int> labels(mask.size(), -1);
  std::vector<Detection> detections;
  std::vector<std::size_t> stack;
  int next_label = 0;
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      const std::size_t start = static_cast<std::size_t>(y0) * w + x0;
      if (!mask[start] || labels[start] != -1) continue;
      const int label = next_label++;
      labels[start] = label;
      stack.assign(1, start);
      long sum_x = 0, sum_y = 0;
      int count = 0;
      int min_x = x0, max_x = x0, min_y = y0, max_y = y0;
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        const int x = static_cast<int>(i % w);
        const int y = static_cast<int>(i / w);
        sum_x += x;
        sum_y += y;
        ++count;
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
            if (mask[ni] && labels[ni] == -1) {
              labels[ni] = label;
              stack.push_back(ni);
            }
          }
        }
      }
      if (count < min_area) continue;
      Detection det;
      det.box = BoundingBox{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
      det.cx = static_cast<double>(sum_x) / count;
      det.cy = static_cast<double>(sum_y) / count;
      det.area = count;
      detections.push_back(det);
    }
  }

  std::sort(detections.begin(), detections.end(), [](const Detection& a, const Detection& b) {
    if (a.box.y != b.box.y) return a.box.y < b.box.y;
    return a.box.x < b.box.x;
  });
  return detections;
}

}  // namespace movrec
