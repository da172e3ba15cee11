#include "core/gauge.hpp"

#include <cmath>
#include <random>

namespace zentner {

TwoForm curvature(const LocalConnection& A) {
  return exterior_derivative(A.form()) +
         wedge_bracket(A.form(), A.form()).scaled(0.5);
}

TwoForm covariant_exterior_derivative(const TensorialOneForm& alpha,
                                      const LocalConnection& A) {
  require(alpha.form().algebra() == A.form().algebra(),
          ErrorCode::InvalidArgument,
          "covariant derivative needs a shared structure algebra");
  return exterior_derivative(alpha.form()) +
         wedge_bracket(A.form(), alpha.form());
}

GaugeTransformation::GaugeTransformation(Chart chart, MatrixGroupPtr group,
                                         ValueFn value, FdPolicy fd)
    : chart_(std::move(chart)),
      group_(std::move(group)),
      value_(std::move(value)),
      fd_(fd) {
  require(static_cast<bool>(value_), ErrorCode::InvalidArgument,
          "gauge transformation needs a value callback");
  require(group_ != nullptr, ErrorCode::InvalidArgument,
          "gauge transformation needs a matrix group");
}

CMat GaugeTransformation::value(const Vec& x) const {
  chart_.require_inside(x);
  CMat g = value_(x);
  group_->require_member(g);
  return g;
}

CMat GaugeTransformation::derivative(const Vec& x, int axis) const {
  double h = fd_.step(chart_, axis);
  chart_.require_inside(x, 2.0 * h);
  Vec xp = x, xm = x, xpp = x, xmm = x;
  xp[axis] += h;
  xm[axis] -= h;
  xpp[axis] += 2.0 * h;
  xmm[axis] -= 2.0 * h;
  return (-value(xpp) + 8.0 * value(xp) - 8.0 * value(xm) + value(xmm)) /
         (12.0 * h);
}

GaugeTransformation random_gauge(const Chart& chart, const MatrixGroupPtr& group,
                                 std::uint64_t seed, double amplitude) {
  const int m = chart.dim();
  const int n = group->algebra()->dim();
  std::mt19937_64 eng(seed);
  Mat amp(n, m), phase(n, m);
  Vec constant(n);
  for (int a = 0; a < n; ++a) constant[a] = uniform_in(eng, -1.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      amp(a, b) = uniform_in(eng, -1.0, 1.0);
      phase(a, b) = uniform_in(eng, 0.0, 6.28318530717958648);
    }
  MatrixGroupPtr grp = group;
  auto value = [grp, constant, amp, phase, amplitude, n, m](const Vec& x) {
    Vec coeff(n);
    for (int a = 0; a < n; ++a) {
      double f = constant[a];
      for (int b = 0; b < m; ++b) f += amp(a, b) * std::sin(x[b] + phase(a, b));
      coeff[a] = amplitude * f;
    }
    return grp->exp_coords(coeff);
  };
  return GaugeTransformation(chart, group, value);
}

nlohmann::json LocalTriple::to_json() const {
  nlohmann::json doc;
  doc["scenario"] = scenario;
  doc["algebra"] = algebra->name();
  doc["group"] = group ? group->name() : "";
  nlohmann::json chart_doc;
  chart_doc["names"] = chart.names();
  chart_doc["lo"] = std::vector<double>(chart.lo().data(),
                                        chart.lo().data() + chart.dim());
  chart_doc["hi"] = std::vector<double>(chart.hi().data(),
                                        chart.hi().data() + chart.dim());
  doc["chart"] = chart_doc;
  doc["expected_integrable"] = expected_integrable;
  if (std::isfinite(kappa)) doc["kappa"] = kappa;
  doc["params"] = params;
  return doc;
}

namespace {

// Conjugation of a coordinate-valued 1-form row matrix by h(x):
// each row r -> coords(h M(r) h^{-1}).
Mat conjugate_rows(const MatrixGroup& group, const CMat& h, const Mat& rows) {
  Mat ad = group.Ad_matrix(h);
  return rows * ad.transpose();
}

}  // namespace

TensorialOneForm gauge_transform(const GaugeTransformation& h,
                                 const TensorialOneForm& alpha) {
  const OneForm& form = alpha.form();
  require(h.group()->algebra() == form.algebra(), ErrorCode::InvalidArgument,
          "gauge transformation and form live on different algebras");
  MatrixGroupPtr group = h.group();
  GaugeTransformation hcopy = h;
  OneForm f = form;
  auto value = [hcopy, f, group](const Vec& x) -> Mat {
    return conjugate_rows(*group, hcopy.value(x), f.value(x));
  };
  return TensorialOneForm(
      OneForm(form.chart(), form.algebra(), value, nullptr, form.fd()));
}

LocalConnection gauge_transform(const GaugeTransformation& h,
                                const LocalConnection& A) {
  const OneForm& form = A.form();
  require(h.group()->algebra() == form.algebra(), ErrorCode::InvalidArgument,
          "gauge transformation and connection live on different algebras");
  MatrixGroupPtr group = h.group();
  GaugeTransformation hcopy = h;
  OneForm f = form;
  const int m = form.chart().dim();
  auto value = [hcopy, f, group, m](const Vec& x) -> Mat {
    CMat hx = hcopy.value(x);
    CMat hinv = hx.inverse();
    Mat out = conjugate_rows(*group, hx, f.value(x));
    for (int i = 0; i < m; ++i) {
      CMat dh = hcopy.derivative(x, i);
      out.row(i) -= group->coords_of(dh * hinv).transpose();
    }
    return out;
  };
  return LocalConnection(
      OneForm(form.chart(), form.algebra(), value, nullptr, form.fd()));
}

LocalTriple gauge_act(const GaugeTransformation& h, const LocalTriple& t) {
  require(t.group != nullptr, ErrorCode::InvalidArgument,
          "gauge action needs a triple with a matrix realization");
  require(t.group == h.group() || t.group->algebra() == h.group()->algebra(),
          ErrorCode::InvalidArgument,
          "gauge transformation group does not match the triple");
  LocalTriple out = t;
  out.alpha = gauge_transform(h, t.alpha);
  out.connection = gauge_transform(h, t.connection);
  return out;
}

AdmissibilityResult admissibility(const TensorialOneForm& alpha, const Vec& x,
                                  double threshold) {
  AdmissibilityResult res;
  const OneForm& form = alpha.form();
  if (form.chart().dim() != form.algebra()->dim()) {
    // dim(M) != dim(H): no admissible form exists on such a pair
    res.square = false;
    return res;
  }
  res.square = true;
  res.det = form.value(x).determinant();
  res.admissible = std::abs(res.det) > threshold;
  return res;
}

Vec beta_apply(const TensorialOneForm& alpha, const Vec& v, const Vec& x) {
  return alpha.form().apply(x, v);
}

Vec beta_inverse(const TensorialOneForm& alpha, const Vec& xi, const Vec& x) {
  const OneForm& form = alpha.form();
  require(form.chart().dim() == form.algebra()->dim(),
          ErrorCode::DimensionMismatch,
          "beta_inverse needs dim(chart) = dim(algebra)");
  Mat a = form.value(x).transpose();  // columns: alpha(d_i)
  Eigen::PartialPivLU<Mat> lu(a);
  Vec v = lu.solve(xi);
  require((a * v - xi).cwiseAbs().maxCoeff() <=
              1e-8 * (1.0 + xi.cwiseAbs().maxCoeff()),
          ErrorCode::SingularAlpha, "alpha is singular at the requested point");
  return v;
}

}  // namespace zentner
