#ifndef MOVREC_FRAMEIO_HPP_
#define MOVREC_FRAMEIO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "movrec/image.hpp"

namespace movrec {

struct FrameSequence {
  std::vector<GrayFrame> frames;
  std::string source_id;
  std::optional<double> frame_rate_hint;
};

// Reads a binary PGM (P5, maxval 255) or an 8-bit grayscale/RGB PNG.
// RGB collapses to luma 0.299R + 0.587G + 0.114B; intensities scale by 1/255.
GrayFrame load_frame(const std::filesystem::path& path);

// Loads frame_%06d.pgm|png numbered gap-free from 0, all frames same size.
FrameSequence load_sequence(const std::filesystem::path& dir);

// P5, maxval 255, intensities quantized by round(p*255) and clamped.
void write_pgm(const GrayFrame& frame, const std::filesystem::path& path);

// Copy of the frame with each box's 1-pixel border set to 1.0. Labels are not
// rasterized; they belong in the JSONL sidecar.
GrayFrame draw_boxes(const GrayFrame& frame,
                     const std::vector<std::pair<BoundingBox, std::string>>& boxes);

std::string sequence_frame_name(int index, const char* ext = ".pgm");

}  // namespace movrec

#endif  // MOVREC_FRAMEIO_HPP_
