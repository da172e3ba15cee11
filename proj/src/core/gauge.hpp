#pragma once

#include <limits>

#include <nlohmann/json.hpp>

#include "core/forms.hpp"
#include "core/matrix_group.hpp"

namespace zentner {

// Local face of a connection on a trivialized patch: an h-valued 1-form A_U.
class LocalConnection {
 public:
  explicit LocalConnection(OneForm form) : form_(std::move(form)) {}
  const OneForm& form() const { return form_; }

  LocalConnection operator+(const OneForm& tensorial) const {
    return LocalConnection(form_ + tensorial);
  }

 private:
  OneForm form_;
};

// Local face of a tensorial 1-form of type Ad: an h-valued 1-form alpha_U
// transforming by conjugation under gauge changes.
class TensorialOneForm {
 public:
  explicit TensorialOneForm(OneForm form) : form_(std::move(form)) {}
  const OneForm& form() const { return form_; }

 private:
  OneForm form_;
};

// Curvature in the trivialization: Omega = dA + (1/2)[A ^ A].
TwoForm curvature(const LocalConnection& A);

// d_A alpha = d alpha + [A ^ alpha]; with A = 0 this is the plain d.
TwoForm covariant_exterior_derivative(const TensorialOneForm& alpha,
                                      const LocalConnection& A);

// A smooth group-valued map on the chart. Values are membership-checked on
// evaluation; derivatives come from the shared stencil policy.
class GaugeTransformation {
 public:
  using ValueFn = std::function<CMat(const Vec&)>;

  GaugeTransformation(Chart chart, MatrixGroupPtr group, ValueFn value,
                      FdPolicy fd = {});

  const Chart& chart() const { return chart_; }
  const MatrixGroupPtr& group() const { return group_; }
  CMat value(const Vec& x) const;
  CMat derivative(const Vec& x, int axis) const;

 private:
  Chart chart_;
  MatrixGroupPtr group_;
  ValueFn value_;
  FdPolicy fd_;
};

// Smooth seeded map x -> exp(sum_a f_a(x) e_a) with low-frequency random
// coefficient functions f_a of the given amplitude. Deterministic in seed.
GaugeTransformation random_gauge(const Chart& chart, const MatrixGroupPtr& group,
                                 std::uint64_t seed, double amplitude = 0.35);

// Chart-level admissible-triple data: the pair (alpha_U, A_U) plus the
// structure algebra and an optional matrix realization of the group.
struct LocalTriple {
  std::string scenario;
  Chart chart;
  LieAlgebraPtr algebra;
  MatrixGroupPtr group;  // may be null when no realization is attached
  TensorialOneForm alpha;
  LocalConnection connection;
  // Optional evaluation frame: rows are tangent frame vectors in chart
  // coordinates (an orthonormal frame for metric scenarios). Residual norms
  // are taken on frame pairs; identity when absent.
  std::function<Mat(const Vec&)> frame;
  bool expected_integrable = false;
  double kappa = std::numeric_limits<double>::quiet_NaN();
  nlohmann::json params;

  Mat frame_at(const Vec& x) const {
    return frame ? frame(x) : Mat::Identity(chart.dim(), chart.dim());
  }
  nlohmann::json to_json() const;
};

// Elementary gauge transforms in the fixed local convention
//   A' = h A h^{-1} - (dh) h^{-1},   alpha' = h alpha h^{-1}.
LocalConnection gauge_transform(const GaugeTransformation& h,
                                const LocalConnection& A);
TensorialOneForm gauge_transform(const GaugeTransformation& h,
                                 const TensorialOneForm& alpha);
LocalTriple gauge_act(const GaugeTransformation& h, const LocalTriple& t);

// det of the n x n coordinate matrix of alpha at x. A non-square matrix is a
// structured result (the triple cannot be admissible), not an exception.
struct AdmissibilityResult {
  bool square = false;
  double det = std::numeric_limits<double>::quiet_NaN();
  bool admissible = false;
};
AdmissibilityResult admissibility(const TensorialOneForm& alpha, const Vec& x,
                                  double threshold = 1e-10);

// The bundle isomorphism beta: T_M -> Ad(P) read through the trivialization:
// beta_apply(v) = alpha(v); beta_inverse solves alpha(v) = xi for v.
Vec beta_apply(const TensorialOneForm& alpha, const Vec& v, const Vec& x);
Vec beta_inverse(const TensorialOneForm& alpha, const Vec& xi, const Vec& x);

}  // namespace zentner
