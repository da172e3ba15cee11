#include "core/metric.hpp"

namespace zentner {

Mat MetricChart::metric_at(const Vec& x) const {
  chart.require_inside(x);
  Mat m = g(x);
  const int d = chart.dim();
  require(m.rows() == d && m.cols() == d, ErrorCode::DimensionMismatch,
          "metric value has wrong shape");
  require((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-10,
          ErrorCode::InvalidArgument, "metric is not symmetric");
  Eigen::LLT<Mat> llt(m);
  require(llt.info() == Eigen::Success, ErrorCode::SingularAlpha,
          "metric is not positive definite at the requested point");
  return m;
}

Mat MetricChart::metric_derivative(const Vec& x, int axis) const {
  if (dg) return dg(x, axis);
  double h = fd_base * chart.extent(axis);
  chart.require_inside(x, 2.0 * h);
  Vec xp = x, xm = x, xpp = x, xmm = x;
  xp[axis] += h;
  xm[axis] -= h;
  xpp[axis] += 2.0 * h;
  xmm[axis] -= 2.0 * h;
  return (-g(xpp) + 8.0 * g(xp) - 8.0 * g(xm) + g(xmm)) / (12.0 * h);
}

Tensor3 levi_civita_oracle(const MetricChart& mc, const Vec& x) {
  const int m = mc.chart.dim();
  Mat gx = mc.metric_at(x);
  Mat ginv = gx.inverse();
  std::vector<Mat> dgx(m);
  for (int k = 0; k < m; ++k) dgx[k] = mc.metric_derivative(x, k);

  Tensor3 gamma(m, m, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int l = 0; l < m; ++l)
          s += ginv(k, l) * (dgx[i](j, l) + dgx[j](i, l) - dgx[l](i, j));
        gamma(k, i, j) = 0.5 * s;
      }
  return gamma;
}

Tensor4 riemann_from_christoffel(
    const std::function<Tensor3(const Vec&)>& gamma, const Chart& chart,
    const Vec& x, double fd_base) {
  const int m = chart.dim();
  Tensor3 g0 = gamma(x);

  // dGamma[a] = d/dx_a Gamma
  std::vector<Tensor3> dgamma;
  dgamma.reserve(m);
  for (int a = 0; a < m; ++a) {
    double h = fd_base * chart.extent(a);
    chart.require_inside(x, 2.0 * h);
    Vec xp = x, xm = x, xpp = x, xmm = x;
    xp[a] += h;
    xm[a] -= h;
    xpp[a] += 2.0 * h;
    xmm[a] -= 2.0 * h;
    Tensor3 gp = gamma(xp), gm = gamma(xm), gpp = gamma(xpp), gmm = gamma(xmm);
    Tensor3 d(m, m, m);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          d(k, i, j) = (-gpp(k, i, j) + 8.0 * gp(k, i, j) - 8.0 * gm(k, i, j) +
                        gmm(k, i, j)) /
                       (12.0 * h);
    dgamma.push_back(std::move(d));
  }

  // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  Tensor4 r(m, m, m, m);
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          double s = dgamma[i](l, j, k) - dgamma[j](l, i, k);
          for (int q = 0; q < m; ++q)
            s += g0(l, i, q) * g0(q, j, k) - g0(l, j, q) * g0(q, i, k);
          r(l, k, i, j) = s;
        }
  return r;
}

Tensor4 riemann_oracle(const MetricChart& mc, const Vec& x) {
  return riemann_from_christoffel(
      [&mc](const Vec& p) { return levi_civita_oracle(mc, p); }, mc.chart, x,
      mc.fd_base);
}

double riemann_sectional_oracle(const MetricChart& mc, const Vec& x,
                                const Vec& u, const Vec& v) {
  const int m = mc.chart.dim();
  require(u.size() == m && v.size() == m, ErrorCode::DimensionMismatch,
          "plane vectors must match the chart dimension");
  Mat gx = mc.metric_at(x);
  double uu = u.dot(gx * u), vv = v.dot(gx * v), uv = u.dot(gx * v);
  double denom = uu * vv - uv * uv;
  require(denom > 1e-14 * (uu * vv + 1e-300), ErrorCode::InvalidArgument,
          "degenerate plane for sectional curvature");

  Tensor4 r = riemann_oracle(mc, x);
  // w = R(u, v) v
  Vec w = Vec::Zero(m);
  for (int l = 0; l < m; ++l) {
    double s = 0.0;
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          s += r(l, k, i, j) * v[k] * u[i] * v[j];
    w[l] = s;
  }
  return u.dot(gx * w) / denom;
}

}  // namespace zentner
