#include "movrec/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <set>

#include "movrec/error.hpp"

namespace movrec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr char kMagic[4] = {'L', 'G', 'P', 'C'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "model-library serialization assumes a little-endian host");

void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_f64(std::ostream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw Error(ErrorCode::UnreadableFile, "truncated model file");
  return v;
}

double read_f64(std::istream& in) {
  double v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw Error(ErrorCode::UnreadableFile, "truncated model file");
  return v;
}

}  // namespace

double angle_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < 1e-12 || nb < 1e-12) {
    throw Error(ErrorCode::ZeroVector, "angle undefined for near-zero vectors");
  }
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return std::acos(c);
}

ClassLibrary train_library(
    const std::vector<std::pair<std::string, std::vector<std::vector<double>>>>& features_by_class,
    int k, double reject_threshold) {
  if (features_by_class.size() < 2) {
    throw Error(ErrorCode::TooFewClasses, "need at least 2 classes");
  }
  if (!(reject_threshold > 0.0 && reject_threshold <= kPi / 2.0)) {
    throw Error(ErrorCode::InvalidThreshold, "reject threshold must be in (0, pi/2]");
  }

  std::set<std::string> seen;
  std::size_t total = 0;
  std::size_t dim = 0;
  for (const auto& [label, feats] : features_by_class) {
    if (label.empty()) throw Error(ErrorCode::EmptyLabel, "class label is empty");
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::InvalidParams, "duplicate class label: " + label);
    }
    if (feats.empty()) {
      throw Error(ErrorCode::EmptyDirectory, "class has no features: " + label);
    }
    for (const auto& f : feats) {
      if (dim == 0) dim = f.size();
      if (f.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "feature lengths differ");
      }
      ++total;
    }
  }

  Eigen::MatrixXd X(total, dim);
  Eigen::Index row = 0;
  for (const auto& [label, feats] : features_by_class) {
    for (const auto& f : feats) {
      X.row(row++) = Eigen::Map<const Eigen::VectorXd>(f.data(), f.size());
    }
  }

  ClassLibrary lib;
  lib.pca = fit_pca(X, k);
  lib.reject_threshold = reject_threshold;
  for (const auto& [label, feats] : features_by_class) {
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(lib.pca.rank);
    for (const auto& f : feats) {
      mean += project(lib.pca, Eigen::Map<const Eigen::VectorXd>(f.data(), f.size()));
    }
    mean /= static_cast<double>(feats.size());
    lib.classes.emplace_back(label, std::move(mean));
  }
  return lib;
}

Classification classify_projected(const Eigen::VectorXd& p, const ClassLibrary& lib) {
  if (p.norm() < 1e-12) {
    return Classification{std::nullopt, kPi};
  }
  double best = std::numeric_limits<double>::infinity();
  const std::string* best_label = nullptr;
  for (const auto& [label, mean] : lib.classes) {
    // A class whose projected mean vanished carries no direction; skip it.
    if (mean.norm() < 1e-12) continue;
    const double dist = angle_distance(p, mean);
    if (dist < best) {
      best = dist;
      best_label = &label;
    }
  }
  if (best_label == nullptr) return Classification{std::nullopt, kPi};
  if (best > lib.reject_threshold) return Classification{std::nullopt, best};
  return Classification{*best_label, best};
}

Classification classify(const std::vector<double>& x, const ClassLibrary& lib) {
  if (static_cast<int>(x.size()) != lib.pca.dim) {
    throw Error(ErrorCode::DimensionMismatch, "feature length does not match library");
  }
  const Eigen::VectorXd p =
      project(lib.pca, Eigen::Map<const Eigen::VectorXd>(x.data(), x.size()));
  return classify_projected(p, lib);
}

void save_library(const ClassLibrary& lib, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::UnreadableFile, "cannot write " + path.string());

  out.write(kMagic, 4);
  write_u32(out, kVersion);
  write_u32(out, static_cast<std::uint32_t>(lib.pca.dim));
  write_u32(out, static_cast<std::uint32_t>(lib.pca.rank));
  for (int i = 0; i < lib.pca.dim; ++i) write_f64(out, lib.pca.mean(i));
  for (int r = 0; r < lib.pca.dim; ++r) {
    for (int c = 0; c < lib.pca.rank; ++c) write_f64(out, lib.pca.basis(r, c));
  }
  for (int i = 0; i < lib.pca.rank; ++i) write_f64(out, lib.pca.eigenvalues(i));
  write_f64(out, lib.reject_threshold);
  write_u32(out, static_cast<std::uint32_t>(lib.classes.size()));
  for (const auto& [label, mean] : lib.classes) {
    write_u32(out, static_cast<std::uint32_t>(label.size()));
    out.write(label.data(), static_cast<std::streamsize>(label.size()));
    for (int i = 0; i < lib.pca.rank; ++i) write_f64(out, mean(i));
  }
  if (!out) throw Error(ErrorCode::UnreadableFile, "write failed: " + path.string());
}

ClassLibrary load_library(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::UnreadableFile, "cannot open " + path.string());

  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw Error(ErrorCode::ModelVersionMismatch, "bad model magic: " + path.string());
  }
  const std::uint32_t version = read_u32(in);
  if (version != kVersion) {
    throw Error(ErrorCode::ModelVersionMismatch,
                "unsupported model version " + std::to_string(version));
  }
  const std::uint32_t d = read_u32(in);
  const std::uint32_t k = read_u32(in);
  if (d == 0 || k == 0 || k > d || d > 100000000u) {
    throw Error(ErrorCode::ModelVersionMismatch, "implausible model dimensions");
  }

  ClassLibrary lib;
  lib.pca.dim = static_cast<int>(d);
  lib.pca.rank = static_cast<int>(k);
  lib.pca.mean.resize(d);
  for (std::uint32_t i = 0; i < d; ++i) lib.pca.mean(i) = read_f64(in);
  lib.pca.basis.resize(d, k);
  for (std::uint32_t r = 0; r < d; ++r) {
    for (std::uint32_t c = 0; c < k; ++c) lib.pca.basis(r, c) = read_f64(in);
  }
  lib.pca.eigenvalues.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) lib.pca.eigenvalues(i) = read_f64(in);
  lib.reject_threshold = read_f64(in);
  const std::uint32_t class_count = read_u32(in);
  for (std::uint32_t c = 0; c < class_count; ++c) {
    const std::uint32_t len = read_u32(in);
    if (len > 65536u) throw Error(ErrorCode::ModelVersionMismatch, "implausible label length");
    std::string label(len, '\0');
    in.read(label.data(), len);
    if (!in) throw Error(ErrorCode::UnreadableFile, "truncated model file");
    Eigen::VectorXd mean(k);
    for (std::uint32_t i = 0; i < k; ++i) mean(i) = read_f64(in);
    lib.classes.emplace_back(std::move(label), std::move(mean));
  }
  return lib;
}

}  // namespace movrec
