#include "movrec/frameio.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <regex>

#include "movrec/error.hpp"

namespace movrec {

namespace {

// Netpbm header tokens are separated by whitespace; '#' starts a comment
// running to end of line.
int next_pnm_int(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) {
    throw Error(ErrorCode::UnreadableFile, "malformed PGM header");
  }
  long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1000000000L) throw Error(ErrorCode::UnreadableFile, "PGM header value overflow");
    c = in.get();
  }
  if (c != EOF) in.unget();
  return static_cast<int>(value);
}

GrayFrame load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::UnreadableFile, "cannot open " + path.string());

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw Error(ErrorCode::UnsupportedFormat, "expected binary PGM (P5): " + path.string());
  }
  const int width = next_pnm_int(in);
  const int height = next_pnm_int(in);
  const int maxval = next_pnm_int(in);
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::DimensionZero, "zero-sized PGM: " + path.string());
  }
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedFormat, "PGM maxval must be 255: " + path.string());
  }
  in.get();  // single whitespace byte before raster

  GrayFrame frame(width, height);
  std::vector<unsigned char> row(static_cast<std::size_t>(width));
  for (int y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), width);
    if (in.gcount() != width) {
      throw Error(ErrorCode::UnreadableFile, "truncated PGM raster: " + path.string());
    }
    for (int x = 0; x < width; ++x) frame.at(x, y) = row[x] / 255.0;
  }
  return frame;
}

struct PngReadGuard {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngReadGuard() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

GrayFrame load_png(const std::filesystem::path& path) {
  PngReadGuard g;
  g.fp = std::fopen(path.c_str(), "rb");
  if (!g.fp) throw Error(ErrorCode::UnreadableFile, "cannot open " + path.string());

  unsigned char sig[8];
  if (std::fread(sig, 1, 8, g.fp) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw Error(ErrorCode::UnreadableFile, "not a PNG file: " + path.string());
  }

  g.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!g.png) throw Error(ErrorCode::UnreadableFile, "libpng init failed");
  g.info = png_create_info_struct(g.png);
  if (!g.info) throw Error(ErrorCode::UnreadableFile, "libpng init failed");

  if (setjmp(png_jmpbuf(g.png))) {
    throw Error(ErrorCode::UnreadableFile, "corrupt PNG: " + path.string());
  }
  png_init_io(g.png, g.fp);
  png_set_sig_bytes(g.png, 8);
  png_read_info(g.png, g.info);

  const png_uint_32 width = png_get_image_width(g.png, g.info);
  const png_uint_32 height = png_get_image_height(g.png, g.info);
  const int bit_depth = png_get_bit_depth(g.png, g.info);
  const int color_type = png_get_color_type(g.png, g.info);

  if (width == 0 || height == 0) {
    throw Error(ErrorCode::DimensionZero, "zero-sized PNG: " + path.string());
  }
  if (bit_depth == 16) {
    throw Error(ErrorCode::UnsupportedFormat, "16-bit PNG not supported: " + path.string());
  }
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(g.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(g.png);
  if (png_get_valid(g.png, g.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(g.png);
  png_set_strip_alpha(g.png);
  png_read_update_info(g.png, g.info);

  const int channels = png_get_channels(g.png, g.info);
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCode::UnsupportedFormat, "PNG must decode to gray or RGB: " + path.string());
  }

  GrayFrame frame(static_cast<int>(width), static_cast<int>(height));
  std::vector<unsigned char> row(static_cast<std::size_t>(width) * channels);
  for (png_uint_32 y = 0; y < height; ++y) {
    png_read_row(g.png, row.data(), nullptr);
    for (png_uint_32 x = 0; x < width; ++x) {
      double v;
      if (channels == 1) {
        v = row[x] / 255.0;
      } else {
        const unsigned char* p = &row[x * 3];
        v = (0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]) / 255.0;
      }
      frame.at(static_cast<int>(x), static_cast<int>(y)) = v;
    }
  }
  png_read_end(g.png, nullptr);
  return frame;
}

}  // namespace

GrayFrame load_frame(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) {
    throw Error(ErrorCode::UnreadableFile, "no such file: " + path.string());
  }
  const std::string ext = path.extension().string();
  if (ext == ".pgm") return load_pgm(path);
  if (ext == ".png") return load_png(path);

  // No recognized extension: sniff the magic bytes.
  std::ifstream in(path, std::ios::binary);
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in && magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
  if (in && static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') return load_png(path);
  throw Error(ErrorCode::UnsupportedFormat, "unrecognized image format: " + path.string());
}

std::string sequence_frame_name(int index, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06d", index);
  return std::string(buf) + ext;
}

FrameSequence load_sequence(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec) || ec) {
    throw Error(ErrorCode::UnreadableFile, "not a directory: " + dir.string());
  }

  static const std::regex frame_re("frame_([0-9]{6})\\.(pgm|png)");
  int max_index = -1;
  std::size_t matching = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, m, frame_re)) {
      ++matching;
      max_index = std::max(max_index, std::stoi(m[1].str()));
    }
  }
  if (matching == 0) {
    throw Error(ErrorCode::EmptyDirectory, "no frame_%06d.pgm|png files in " + dir.string());
  }

  FrameSequence seq;
  seq.source_id = dir.filename().string();
  for (int i = 0; i <= max_index; ++i) {
    std::filesystem::path p = dir / sequence_frame_name(i, ".pgm");
    if (!std::filesystem::exists(p)) p = dir / sequence_frame_name(i, ".png");
    if (!std::filesystem::exists(p)) {
      throw Error(ErrorCode::NumberingGap,
                  "missing frame index " + std::to_string(i) + " in " + dir.string());
    }
    GrayFrame frame = load_frame(p);
    if (!seq.frames.empty() &&
        (frame.width != seq.frames.front().width || frame.height != seq.frames.front().height)) {
      throw Error(ErrorCode::InconsistentDimensions, "frame sizes differ in " + dir.string());
    }
    seq.frames.push_back(std::move(frame));
  }
  return seq;
}

void write_pgm(const GrayFrame& frame, const std::filesystem::path& path) {
  if (frame.width < 1 || frame.height < 1) {
    throw Error(ErrorCode::DimensionZero, "refusing to write empty frame");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::UnreadableFile, "cannot write " + path.string());
  out << "P5\n" << frame.width << " " << frame.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(frame.width));
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      const double v = std::clamp(frame.at(x, y), 0.0, 1.0);
      row[x] = static_cast<unsigned char>(std::lround(v * 255.0));
    }
    out.write(reinterpret_cast<const char*>(row.data()), frame.width);
  }
  if (!out) throw Error(ErrorCode::UnreadableFile, "write failed: " + path.string());
}

GrayFrame draw_boxes(const GrayFrame& frame,
                     const std::vector<std::pair<BoundingBox, std::string>>& boxes) {
  GrayFrame out = frame;
  for (const auto& [box, label] : boxes) {
    (void)label;
    if (!box_within_frame(box, frame.width, frame.height)) {
      throw Error(ErrorCode::BoxOutOfBounds, "annotation box outside frame");
    }
    const int x1 = box.x + box.w - 1;
    const int y1 = box.y + box.h - 1;
    for (int x = box.x; x <= x1; ++x) {
      out.at(x, box.y) = 1.0;
      out.at(x, y1) = 1.0;
    }
    for (int y = box.y; y <= y1; ++y) {
      out.at(box.x, y) = 1.0;
      out.at(x1, y) = 1.0;
    }
  }
  return out;
}

}  // namespace movrec
