#include "core/analysis.hpp"

#include <cmath>

namespace zentner {

namespace {

// Worst frame-pair component norm of a 2-form value: max over i<j of
// || value(F_i, F_j) || in the algebra norm (Euclidean fallback when the
// algebra has no inner product).
double frame_pair_norm(const LieAlgebra& alg, const TwoFormValue& v,
                       const Mat& frame) {
  const int m = v.chart_dim();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec comp = v.contract(frame.row(i), frame.row(j));
      worst = std::max(worst, alg.norm_or_euclidean(comp));
    }
  return worst;
}

}  // namespace

ZentnerResiduals zentner_residuals(const LocalTriple& t,
                                   const std::vector<Vec>& grid) {
  TwoForm r1 = covariant_exterior_derivative(t.alpha, t.connection);
  TwoForm r2 = curvature(t.connection) -
               wedge_bracket(t.alpha.form(), t.alpha.form()).scaled(0.5);

  ZentnerResiduals out;
  out.points.resize(grid.size());
  out.r1_table.resize(grid.size());
  out.r2_table.resize(grid.size());
  const LieAlgebra& alg = *t.algebra;
  parallel_for(grid.size(), [&](std::size_t p) {
    const Vec& x = grid[p];
    Mat frame = t.frame_at(x);
    TwoFormValue v1 = r1.value(x);
    TwoFormValue v2 = r2.value(x);
    out.points[p] = {x, frame_pair_norm(alg, v1, frame),
                     frame_pair_norm(alg, v2, frame)};
    out.r1_table[p] = std::move(v1);
    out.r2_table[p] = std::move(v2);
  });
  for (const auto& pt : out.points) {
    out.max_r1 = std::max(out.max_r1, pt.r1);
    out.max_r2 = std::max(out.max_r2, pt.r2);
  }
  return out;
}

Vec bracket_alpha(const LocalTriple& t, const Vec& u, const Vec& v,
                  const Vec& x) {
  Vec au = beta_apply(t.alpha, u, x);
  Vec av = beta_apply(t.alpha, v, x);
  return beta_inverse(t.alpha, t.algebra->bracket(au, av), x);
}

Tensor3 induced_christoffel(const LocalTriple& t, const Vec& x) {
  const int m = t.chart.dim();
  const OneForm& aform = t.alpha.form();
  const OneForm& conn = t.connection.form();
  Mat avalue = aform.value(x);
  Mat cvalue = conn.value(x);
  Tensor3 gamma(m, m, m);
  for (int i = 0; i < m; ++i) {
    Mat da = aform.derivative(x, i);
    for (int j = 0; j < m; ++j) {
      Vec xi = da.row(j).transpose() +
               t.algebra->bracket(cvalue.row(i), avalue.row(j));
      Vec g = beta_inverse(t.alpha, xi, x);
      for (int k = 0; k < m; ++k) gamma(k, i, j) = g[k];
    }
  }
  return gamma;
}

InducedConnectionSample induced_connection(const LocalTriple& t, const Vec& x,
                                           double curvature_fd_base) {
  InducedConnectionSample s;
  s.x = x;
  s.gamma = induced_christoffel(t, x);
  const int m = t.chart.dim();

  s.torsion = Tensor3(m, m, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        s.torsion(k, i, j) = s.gamma(k, i, j) - s.gamma(k, j, i);

  s.curvature_numeric = riemann_from_christoffel(
      [&t](const Vec& p) { return induced_christoffel(t, p); }, t.chart, x,
      curvature_fd_base);

  // R_alg(d_i, d_j) d_k = alpha^{-1}([Omega(d_i, d_j), alpha(d_k)])
  TwoFormValue omega = curvature(t.connection).value(x);
  Mat avalue = t.alpha.form().value(x);
  s.curvature_algebraic = Tensor4(m, m, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Vec& o = omega.at(i, j);
      for (int k = 0; k < m; ++k) {
        Vec r = beta_inverse(t.alpha, t.algebra->bracket(o, avalue.row(k)), x);
        for (int l = 0; l < m; ++l) s.curvature_algebraic(l, k, i, j) = r[l];
      }
    }
  return s;
}

PsiResult metric_orientation_psi(const LocalTriple& t,
                                 const std::vector<Vec>& grid) {
  require(t.algebra->has_inner_product(), ErrorCode::MissingInnerProduct,
          "the moduli map needs the structure algebra's canonical inner "
          "product");
  PsiResult out;
  const Mat& ip = t.algebra->inner_product();
  out.samples.resize(grid.size());
  std::vector<int> signs(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t p) {
    const Vec& x = grid[p];
    AdmissibilityResult adm = admissibility(t.alpha, x);
    require(adm.square && adm.admissible, ErrorCode::SingularAlpha,
            "alpha is inadmissible on the grid; the moduli map is undefined");
    signs[p] = adm.det > 0 ? 1 : -1;
    Mat a = t.alpha.form().value(x);
    Mat g = a * ip * a.transpose();
    Eigen::LLT<Mat> llt(g);
    require(llt.info() == Eigen::Success, ErrorCode::SingularAlpha,
            "recovered metric is not positive definite");
    out.samples[p] = {x, std::move(g)};
  });
  for (int s : signs)
    require(s == signs[0], ErrorCode::SingularAlpha,
            "det(alpha) changes sign across the grid (inadmissible)");
  out.orientation = grid.empty() ? 0 : signs[0];
  return out;
}

MetricChart recovered_metric(const LocalTriple& t) {
  require(t.algebra->has_inner_product(), ErrorCode::MissingInnerProduct,
          "recovered metric needs an inner product on the structure algebra");
  Mat ip = t.algebra->inner_product();
  OneForm aform = t.alpha.form();
  std::function<Mat(const Vec&)> value = [aform, ip](const Vec& x) -> Mat {
    Mat a = aform.value(x);
    return a * ip * a.transpose();
  };
  std::function<Mat(const Vec&, int)> deriv;
  if (aform.mode() == DerivMode::ClosedForm) {
    deriv = [aform, ip](const Vec& x, int axis) -> Mat {
      Mat a = aform.value(x);
      Mat da = aform.derivative(x, axis);
      return da * ip * a.transpose() + a * ip * da.transpose();
    };
  }
  return MetricChart{t.chart, std::move(value), std::move(deriv), +1, 5e-4};
}

namespace {

// dexp factor: D(Z) = sum_{p>=0} (-ad_Z)^p / (p+1)!, the matrix with
// exp(Z)^{-1} d exp(Z)[W] = D(Z) W on basis coordinates.
Mat dexp_operator(const LieAlgebra& alg, const Vec& k) {
  const int n = alg.dim();
  Mat ad = alg.ad(k);
  Mat term = Mat::Identity(n, n);
  Mat sum = term;
  for (int p = 1; p <= 60; ++p) {
    term = (term * (-ad)) / static_cast<double>(p + 1);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17) break;
  }
  return sum;
}

}  // namespace

Mat acs_matrix(const LocalTriple& t, const TotalSpacePoint& y,
               double fiber_guard) {
  const int m = t.chart.dim();
  const int n = t.algebra->dim();
  require(m == n, ErrorCode::DimensionMismatch,
          "the almost complex structure needs dim(chart) = dim(algebra)");
  require(y.fiber.size() == n, ErrorCode::DimensionMismatch,
          "fiber coordinate size mismatch");
  require(y.fiber.norm() <= fiber_guard, ErrorCode::ChartBounds,
          "fiber coordinates leave the exponential injectivity guard");
  t.chart.require_inside(y.base);

  // Ad_{h^{-1}} = exp(-ad_Z) on coordinates, h = exp(Z), Z = sum fiber_a e_a
  Mat ad_inv = matrix_exp(Mat(-t.algebra->ad(y.fiber)));
  Mat dexp = dexp_operator(*t.algebra, y.fiber);

  // rows -> columns: hat maps tangent coordinates to algebra coordinates
  Mat alpha_hat = ad_inv * t.alpha.form().value(y.base).transpose();
  Mat conn_hat = ad_inv * t.connection.form().value(y.base).transpose();

  Eigen::PartialPivLU<Mat> alpha_lu(alpha_hat);
  double alpha_det = std::abs(alpha_lu.determinant());
  require(alpha_det > 1e-12, ErrorCode::SingularAlpha,
          "alpha is singular at the base point");
  Eigen::PartialPivLU<Mat> dexp_lu(dexp);

  Mat alpha_inv = alpha_lu.inverse();
  Mat dexp_inv = dexp_lu.inverse();

  // With P = alpha_hat^{-1} conn_hat and the fiber velocity map dexp:
  //   J = [ -P                  , -alpha_hat^{-1} dexp            ]
  //       [ dexp^{-1}(alpha_hat + conn_hat P) , dexp^{-1} conn_hat alpha_hat^{-1} dexp ]
  Mat p = alpha_inv * conn_hat;
  Mat j(2 * n, 2 * n);
  j.topLeftCorner(n, n) = -p;
  j.topRightCorner(n, n) = -alpha_inv * dexp;
  j.bottomLeftCorner(n, n) = dexp_inv * (alpha_hat + conn_hat * p);
  j.bottomRightCorner(n, n) = dexp_inv * conn_hat * alpha_inv * dexp;
  return j;
}

NijenhuisSample nijenhuis(const LocalTriple& t, const TotalSpacePoint& y,
                          double fiber_guard, double fd_step) {
  const int n = t.algebra->dim();
  const int dim = 2 * n;

  auto j_at = [&](const Vec& coords) -> Mat {
    TotalSpacePoint p{coords.head(n), coords.tail(n)};
    return acs_matrix(t, p, fiber_guard + 4.0 * fd_step);
  };

  Vec y0(dim);
  y0 << y.base, y.fiber;
  Mat j0 = j_at(y0);

  // dJ[a](k, j) = d_a J^k_j
  std::vector<Mat> dj;
  dj.reserve(dim);
  for (int a = 0; a < dim; ++a) {
    double h = fd_step;
    if (a < n) t.chart.require_inside(y.base, 2.0 * h);
    Vec xp = y0, xm = y0, xpp = y0, xmm = y0;
    xp[a] += h;
    xm[a] -= h;
    xpp[a] += 2.0 * h;
    xmm[a] -= 2.0 * h;
    dj.push_back((-j_at(xpp) + 8.0 * j_at(xp) - 8.0 * j_at(xm) + j_at(xmm)) /
                 (12.0 * h));
  }

  NijenhuisSample s;
  s.y = y;
  s.j_scale = j0.cwiseAbs().maxCoeff();
  s.components = Tensor3(dim, dim, dim);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        double v = 0.0;
        for (int l = 0; l < dim; ++l) {
          v += j0(l, i) * dj[l](k, j) - j0(l, j) * dj[l](k, i);
          v -= j0(k, l) * (dj[i](l, j) - dj[j](l, i));
        }
        s.components(k, i, j) = v;
        s.components(k, j, i) = -v;
      }
  s.max_abs = s.components.max_abs();
  return s;
}

}  // namespace zentner
