#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace zentner {

// A coordinate chart: a box in R^m with named coordinates.
class Chart {
 public:
  Chart(std::vector<std::string> names, Vec lo, Vec hi);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  double extent(int axis) const { return hi_[axis] - lo_[axis]; }

  bool contains(const Vec& x, double margin = 0.0) const;
  void require_inside(const Vec& x, double margin = 0.0) const;

 private:
  std::vector<std::string> names_;
  Vec lo_, hi_;
};

// Axis-aligned evaluation grid. Bounds default to the chart box.
struct GridSpec {
  std::vector<int> counts;
  std::optional<Vec> lo, hi;
};

// Grid points in row-major order over the axes (last axis fastest);
// deterministic. Counts must be >= 2 per axis and bounds inside the chart.
std::vector<Vec> make_grid(const Chart& chart, const GridSpec& spec);

// Every ~stride-th point of a grid, deterministic subsample for expensive
// per-point checks.
std::vector<Vec> subsample(const std::vector<Vec>& points, std::size_t max_count);

}  // namespace zentner
