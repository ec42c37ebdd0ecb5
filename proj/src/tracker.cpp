#include "movrec/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "movrec/error.hpp"

namespace movrec {

std::optional<std::string> Track::reported_label() const {
  if (label_votes.empty()) return std::nullopt;
  const std::pair<std::string, int>* best = &label_votes.front();
  for (const auto& entry : label_votes) {
    if (entry.second > best->second) best = &entry;  // strict: earliest wins ties
  }
  return best->first;
}

void vote_label(Track& track, const std::string& label) {
  if (label.empty()) throw Error(ErrorCode::EmptyLabel, "cannot vote an empty label");
  for (auto& entry : track.label_votes) {
    if (entry.first == label) {
      ++entry.second;
      return;
    }
  }
  track.label_votes.emplace_back(label, 1);
}

double pair_cost(const Track& track, const Detection& det, const TrackerParams& params) {
  const double dx = track.cx - det.cx;
  const double dy = track.cy - det.cy;
  const double dist = std::sqrt(dx * dx + dy * dy);
  if (dist > params.gate_radius) return std::numeric_limits<double>::infinity();
  const double hi = std::max<double>(track.area, det.area);
  const double lo = std::min<double>(track.area, det.area);
  if (lo <= 0.0 || hi / lo > params.area_ratio_max) {
    return std::numeric_limits<double>::infinity();
  }
  return dist;
}

std::vector<std::pair<int, int>> greedy_match(const std::vector<std::vector<double>>& cost) {
  struct Entry {
    double c;
    int row;
    int col;
  };
  std::vector<Entry> entries;
  for (int r = 0; r < static_cast<int>(cost.size()); ++r) {
    for (int c = 0; c < static_cast<int>(cost[r].size()); ++c) {
      if (std::isfinite(cost[r][c])) entries.push_back({cost[r][c], r, c});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.c != b.c) return a.c < b.c;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  });

  std::vector<char> row_used(cost.size(), 0);
  std::vector<char> col_used(cost.empty() ? 0 : 0, 0);
  std::size_t ncols = 0;
  for (const auto& r : cost) ncols = std::max(ncols, r.size());
  col_used.assign(ncols, 0);

  std::vector<std::pair<int, int>> matches;
  for (const auto& e : entries) {
    if (row_used[e.row] || col_used[e.col]) continue;
    row_used[e.row] = 1;
    col_used[e.col] = 1;
    matches.emplace_back(e.row, e.col);
  }
  return matches;
}

std::vector<std::uint32_t> Tracker::observe(const std::vector<Detection>& detections) {
  std::vector<std::vector<double>> cost(tracks_.size(),
                                        std::vector<double>(detections.size()));
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    for (std::size_t d = 0; d < detections.size(); ++d) {
      cost[t][d] = pair_cost(tracks_[t], detections[d], params_);
    }
  }
  const auto matches = greedy_match(cost);

  std::vector<char> track_matched(tracks_.size(), 0);
  std::vector<std::uint32_t> assignment(detections.size(), 0);
  std::vector<char> det_matched(detections.size(), 0);
  for (const auto& [t, d] : matches) {
    track_matched[t] = 1;
    det_matched[d] = 1;
    tracks_[t].cx = detections[d].cx;
    tracks_[t].cy = detections[d].cy;
    tracks_[t].area = detections[d].area;
    tracks_[t].misses = 0;
    assignment[d] = tracks_[t].id;
  }
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    ++tracks_[t].age;
    if (!track_matched[t]) ++tracks_[t].misses;
  }
  for (std::size_t d = 0; d < detections.size(); ++d) {
    if (det_matched[d]) continue;
    Track fresh;
    fresh.id = next_id_++;
    fresh.cx = detections[d].cx;
    fresh.cy = detections[d].cy;
    fresh.area = detections[d].area;
    tracks_.push_back(std::move(fresh));
    assignment[d] = tracks_.back().id;
  }
  std::erase_if(tracks_, [this](const Track& t) { return t.misses > params_.max_misses; });
  return assignment;
}

Track* Tracker::find(std::uint32_t id) {
  for (auto& t : tracks_) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

}  // namespace movrec
