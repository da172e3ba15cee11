#include "core/chart.hpp"

#include <sstream>

namespace zentner {

Chart::Chart(std::vector<std::string> names, Vec lo, Vec hi)
    : names_(std::move(names)), lo_(std::move(lo)), hi_(std::move(hi)) {
  require(!names_.empty(), ErrorCode::InvalidArgument,
          "chart needs at least one coordinate");
  require(lo_.size() == dim() && hi_.size() == dim(),
          ErrorCode::DimensionMismatch, "chart bounds size mismatch");
  for (int i = 0; i < dim(); ++i)
    require(hi_[i] > lo_[i], ErrorCode::InvalidArgument,
            "chart bounds degenerate on axis " + names_[i]);
}

bool Chart::contains(const Vec& x, double margin) const {
  if (x.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (x[i] < lo_[i] + margin || x[i] > hi_[i] - margin) return false;
  return true;
}

void Chart::require_inside(const Vec& x, double margin) const {
  require(x.size() == dim(), ErrorCode::DimensionMismatch,
          "point dimension does not match chart");
  if (!contains(x, margin)) {
    std::ostringstream os;
    os << "point (";
    for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ") leaves the chart";
    if (margin > 0.0) os << " (boundary margin " << margin << ")";
    fail(ErrorCode::ChartBounds, os.str());
  }
}

std::vector<Vec> make_grid(const Chart& chart, const GridSpec& spec) {
  const int m = chart.dim();
  require(static_cast<int>(spec.counts.size()) == m,
          ErrorCode::DimensionMismatch, "grid counts must match chart dimension");
  Vec lo = spec.lo.value_or(chart.lo());
  Vec hi = spec.hi.value_or(chart.hi());
  require(lo.size() == m && hi.size() == m, ErrorCode::DimensionMismatch,
          "grid bounds size mismatch");
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) {
    require(spec.counts[i] >= 2, ErrorCode::InvalidArgument,
            "grid counts must be at least 2 per axis");
    require(lo[i] >= chart.lo()[i] && hi[i] <= chart.hi()[i] && hi[i] > lo[i],
            ErrorCode::InvalidArgument, "grid bounds must lie inside the chart");
    total *= static_cast<std::size_t>(spec.counts[i]);
  }

  std::vector<Vec> points;
  points.reserve(total);
  std::vector<int> index(m, 0);
  for (std::size_t p = 0; p < total; ++p) {
    Vec x(m);
    for (int i = 0; i < m; ++i)
      x[i] = lo[i] + (hi[i] - lo[i]) * index[i] / (spec.counts[i] - 1);
    points.push_back(std::move(x));
    for (int axis = m - 1; axis >= 0; --axis) {
      if (++index[axis] < spec.counts[axis]) break;
      index[axis] = 0;
    }
  }
  return points;
}

std::vector<Vec> subsample(const std::vector<Vec>& points,
                           std::size_t max_count) {
  if (points.size() <= max_count || max_count == 0) return points;
  std::vector<Vec> out;
  out.reserve(max_count);
  std::size_t stride = (points.size() + max_count - 1) / max_count;
  for (std::size_t i = 0; i < points.size() && out.size() < max_count;
       i += stride)
    out.push_back(points[i]);
  return out;
}

}  // namespace zentner
