#ifndef MOVREC_TRACKER_HPP_
#define MOVREC_TRACKER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "movrec/detector.hpp"

namespace movrec {

struct TrackerParams {
  double gate_radius = 40.0;
  double area_ratio_max = 2.0;  // >= 1
  int max_misses = 5;

  bool operator==(const TrackerParams&) const = default;
};

struct Track {
  std::uint32_t id = 0;
  double cx = 0.0;
  double cy = 0.0;
  int area = 0;
  int age = 1;     // frames since creation
  int misses = 0;  // consecutive unmatched frames
  // (label, votes) in first-vote order; ties resolve to the earliest entry.
  std::vector<std::pair<std::string, int>> label_votes;

  std::optional<std::string> reported_label() const;
};

void vote_label(Track& track, const std::string& label);

// Gated centroid distance, infinite when out of gate or the area ratio
// exceeds the cap.
double pair_cost(const Track& track, const Detection& det, const TrackerParams& params);

// Greedy one-to-one matching by ascending cost over a dense cost matrix;
// infinite entries never match. Equal costs resolve by (row, col). Returns
// (row, col) pairs.
std::vector<std::pair<int, int>> greedy_match(const std::vector<std::vector<double>>& cost);

class Tracker {
 public:
  explicit Tracker(TrackerParams params) : params_(params) {}

  // One association round. Matched tracks take the detection's centroid and
  // area; unmatched detections spawn tracks; tracks over the miss limit are
  // dropped. Returns the track id assigned to each detection index.
  std::vector<std::uint32_t> observe(const std::vector<Detection>& detections);

  std::vector<Track>& tracks() { return tracks_; }
  const std::vector<Track>& tracks() const { return tracks_; }
  Track* find(std::uint32_t id);

 private:
  TrackerParams params_;
  std::vector<Track> tracks_;
  std::uint32_t next_id_ = 1;
};

}  // namespace movrec

#endif  // MOVREC_TRACKER_HPP_
