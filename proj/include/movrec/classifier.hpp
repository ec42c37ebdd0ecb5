#ifndef MOVREC_CLASSIFIER_HPP_
#define MOVREC_CLASSIFIER_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "movrec/pca.hpp"

namespace movrec {

// arccos of the normalized inner product, clamped into [-1, 1] first so the
// result is always a real angle in [0, pi].
double angle_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

struct ClassLibrary {
  PcaModel pca;
  // Insertion order is the tie-break order for classification.
  std::vector<std::pair<std::string, Eigen::VectorXd>> classes;
  double reject_threshold = 0.0;  // radians, (0, pi/2]
};

struct Classification {
  std::optional<std::string> label;  // nullopt = unknown / rejected
  double distance = 0.0;             // radians; pi when no class is comparable
};

// Fits one PCA over the union of all classes' raw feature vectors, then
// stores each class's mean projected vector.
ClassLibrary train_library(
    const std::vector<std::pair<std::string, std::vector<std::vector<double>>>>& features_by_class,
    int k, double reject_threshold);

Classification classify(const std::vector<double>& x, const ClassLibrary& lib);

// Same decision rule applied to an already-projected vector.
Classification classify_projected(const Eigen::VectorXd& p, const ClassLibrary& lib);

// Binary model-library file, little-endian. Magic "LGPC", version 1.
void save_library(const ClassLibrary& lib, const std::filesystem::path& path);
ClassLibrary load_library(const std::filesystem::path& path);

}  // namespace movrec

#endif  // MOVREC_CLASSIFIER_HPP_
