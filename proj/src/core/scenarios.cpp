#include "core/scenarios.hpp"

#include <cmath>

namespace zentner {

ReductivePair::ReductivePair(LieAlgebraPtr ambient, std::vector<int> h_indices,
                             std::vector<int> m_indices)
    : ambient_(std::move(ambient)),
      h_idx_(std::move(h_indices)),
      m_idx_(std::move(m_indices)) {
  const int dim = ambient_->dim();
  std::vector<bool> seen(dim, false);
  for (int i : h_idx_) {
    require(i >= 0 && i < dim && !seen[i], ErrorCode::InvalidArgument,
            "bad subalgebra index set");
    seen[i] = true;
  }
  for (int i : m_idx_) {
    require(i >= 0 && i < dim && !seen[i], ErrorCode::InvalidArgument,
            "bad complement index set");
    seen[i] = true;
  }
  // h must be a subalgebra: [h, h] has no m-components
  for (int a : h_idx_)
    for (int b : h_idx_)
      for (int k : m_idx_)
        require(std::abs(ambient_->c(a, b, k)) <= 1e-12,
                ErrorCode::InvalidArgument,
                "h is not closed under the bracket");
  // m must be Ad_h-invariant at the algebra level: [h, m] in m
  for (int a : h_idx_)
    for (int b : m_idx_)
      for (int k : h_idx_)
        require(std::abs(ambient_->c(a, b, k)) <= 1e-12,
                ErrorCode::InvalidArgument,
                "[h, m] leaves the complement m");
}

Vec ReductivePair::project_h(const Vec& v) const {
  Vec out = Vec::Zero(ambient_->dim());
  for (int i : h_idx_) out[i] = v[i];
  return out;
}

Vec ReductivePair::project_m(const Vec& v) const {
  Vec out = Vec::Zero(ambient_->dim());
  for (int i : m_idx_) out[i] = v[i];
  return out;
}

bool ReductivePair::in_m_span(const Vec& v, double tol) const {
  return (v - project_m(v)).cwiseAbs().maxCoeff() <= tol;
}

std::pair<Vec, Vec> ReductivePair::nomizu_tensors(const Vec& X, const Vec& Y,
                                                  const Vec& Z) const {
  require(X.size() == ambient_->dim() && Y.size() == ambient_->dim() &&
              Z.size() == ambient_->dim(),
          ErrorCode::DimensionMismatch, "nomizu operands size mismatch");
  require(in_m_span(X) && in_m_span(Y) && in_m_span(Z),
          ErrorCode::InvalidArgument,
          "nomizu tensors are defined on the complement m");
  Vec bracket_xy = ambient_->bracket(X, Y);
  Vec torsion = -project_m(bracket_xy);
  Vec curvature = -ambient_->bracket(project_h(bracket_xy), Z);
  return {torsion, curvature};
}

ReductivePair real_form_pair(const RealFormDecomposition& rf) {
  const int n = rf.form_dim();
  std::vector<int> h(n), m(n);
  for (int i = 0; i < n; ++i) {
    h[i] = i;
    m[i] = n + i;
  }
  return ReductivePair(rf.ambient()->algebra(), h, m);
}

// ---- constant-curvature frame scenarios ---------------------------------
//
// Conformal family g = e^{2 phi} delta on a box chart. The orthonormal
// coframe is theta^i = e^phi dx^i, so alpha(d_j) = e^phi L_j, and the
// Levi-Civita connection form in that frame is
//   A(d_k) = so3_of(-e_k x grad phi).

namespace {

struct ConformalFactor {
  std::function<double(const Vec&)> phi;
  std::function<Vec(const Vec&)> grad;
  std::function<Mat(const Vec&)> hess;
};

ConformalFactor conformal_factor(CurvatureModel model) {
  switch (model) {
    case CurvatureModel::Flat:
      return {[](const Vec&) { return 0.0; },
              [](const Vec& x) { return Vec::Zero(x.size()); },
              [](const Vec& x) { return Mat::Zero(x.size(), x.size()); }};
    case CurvatureModel::Halfspace:
      // g = z^{-2} delta
      return {[](const Vec& x) { return -std::log(x[2]); },
              [](const Vec& x) {
                Vec g = Vec::Zero(3);
                g[2] = -1.0 / x[2];
                return g;
              },
              [](const Vec& x) {
                Mat h = Mat::Zero(3, 3);
                h(2, 2) = 1.0 / (x[2] * x[2]);
                return h;
              }};
    case CurvatureModel::Sphere:
      // stereographic chart of the unit 3-sphere: g = 4 delta / (1 + r^2)^2
      return {[](const Vec& x) {
                return std::log(2.0) - std::log1p(x.squaredNorm());
              },
              [](const Vec& x) {
                return Vec(-2.0 / (1.0 + x.squaredNorm()) * x);
              },
              [](const Vec& x) {
                double s = 1.0 + x.squaredNorm();
                Mat h = -2.0 / s * Mat::Identity(3, 3);
                h += 4.0 / (s * s) * x * x.transpose();
                return h;
              }};
  }
  fail(ErrorCode::InvalidArgument, "unknown curvature model");
}

Chart model_chart(CurvatureModel model) {
  auto box = [](double lo, double hi, double zlo, double zhi) {
    Vec l(3), h(3);
    l << lo, lo, zlo;
    h << hi, hi, zhi;
    return Chart({"x", "y", "z"}, l, h);
  };
  switch (model) {
    case CurvatureModel::Flat:
      return box(-1.2, 1.2, -1.2, 1.2);
    case CurvatureModel::Sphere:
      return box(-0.7, 0.7, -0.7, 0.7);
    case CurvatureModel::Halfspace:
      return box(-1.2, 1.2, 0.4, 2.2);
  }
  fail(ErrorCode::InvalidArgument, "unknown curvature model");
}

double model_kappa(CurvatureModel model) {
  switch (model) {
    case CurvatureModel::Flat:
      return 0.0;
    case CurvatureModel::Sphere:
      return 1.0;
    case CurvatureModel::Halfspace:
      return -1.0;
  }
  fail(ErrorCode::InvalidArgument, "unknown curvature model");
}

std::string model_name(CurvatureModel model) {
  switch (model) {
    case CurvatureModel::Flat:
      return "flat";
    case CurvatureModel::Sphere:
      return "sphere";
    case CurvatureModel::Halfspace:
      return "hyperbolic-halfspace";
  }
  fail(ErrorCode::InvalidArgument, "unknown curvature model");
}

}  // namespace

MetricChart scenario_metric(CurvatureModel model) {
  ConformalFactor cf = conformal_factor(model);
  Chart chart = model_chart(model);
  auto phi = cf.phi;
  auto grad = cf.grad;
  std::function<Mat(const Vec&)> g = [phi](const Vec& x) -> Mat {
    return std::exp(2.0 * phi(x)) * Mat::Identity(x.size(), x.size());
  };
  std::function<Mat(const Vec&, int)> dg = [phi, grad](const Vec& x,
                                                       int axis) -> Mat {
    return 2.0 * grad(x)[axis] * std::exp(2.0 * phi(x)) *
           Mat::Identity(x.size(), x.size());
  };
  return MetricChart{std::move(chart), std::move(g), std::move(dg), +1, 5e-4};
}

LocalTriple constant_curvature_triple(double kappa, CurvatureModel model,
                                      const ScenarioOptions& opts) {
  require(kappa == model_kappa(model), ErrorCode::InvalidArgument,
          "model/kappa pair is inconsistent (flat: 0, sphere: +1, "
          "halfspace: -1)");
  Chart chart = model_chart(model);
  ConformalFactor cf = conformal_factor(model);
  auto phi = cf.phi;
  auto grad = cf.grad;
  auto hess = cf.hess;

  OneForm::ValueFn alpha_value = [phi](const Vec& x) -> Mat {
    return std::exp(phi(x)) * Mat::Identity(3, 3);
  };
  OneForm::DerivFn alpha_deriv = [phi, grad](const Vec& x, int axis) -> Mat {
    return grad(x)[axis] * std::exp(phi(x)) * Mat::Identity(3, 3);
  };

  OneForm::ValueFn conn_value = [grad](const Vec& x) -> Mat {
    Vec g = grad(x);
    Mat rows(3, 3);
    for (int k = 0; k < 3; ++k)
      rows.row(k) = -cross(Eigen::Vector3d::Unit(k), g).transpose();
    return rows;
  };
  OneForm::DerivFn conn_deriv = [hess](const Vec& x, int axis) -> Mat {
    Vec dg = hess(x).col(axis);
    Mat rows(3, 3);
    for (int k = 0; k < 3; ++k)
      rows.row(k) = -cross(Eigen::Vector3d::Unit(k), dg).transpose();
    return rows;
  };

  FdPolicy fd{opts.fd_base};
  bool closed = opts.closed_form_derivatives;
  OneForm alpha(chart, so3_algebra(), alpha_value,
                closed ? alpha_deriv : OneForm::DerivFn{}, fd);
  OneForm conn(chart, so3_algebra(), conn_value,
               closed ? conn_deriv : OneForm::DerivFn{}, fd);

  LocalTriple t{model_name(model),
                chart,
                so3_algebra(),
                so3_group(),
                TensorialOneForm(std::move(alpha)),
                LocalConnection(std::move(conn)),
                [phi](const Vec& x) -> Mat {
                  return std::exp(-phi(x)) * Mat::Identity(3, 3);
                },
                kappa == -1.0,
                kappa,
                nlohmann::json{
                    {"derivatives",
                     closed ? "closed-form" : "finite-difference"},
                    {"fd_base", opts.fd_base}}};
  return t;
}

// ---- real-form slice scenarios ------------------------------------------
//
// sigma(x) = exp(Z(x)), Z(x) = sum_j x_j (i e_j). The pulled-back
// Maurer-Cartan form is omega(d_j) = D(Z)(i e_j) with
// D(Z) = sum_p (-ad_Z)^p / (p+1)!, and (A, alpha) is its split
// omega = theta - i alpha. Everything is computed on ambient coordinates,
// so only structure constants enter.

namespace {

constexpr int kDexpTerms = 48;

// D(z) and optionally the partial derivatives d/dx_k D(z) for linear
// Z(x) = sum x_a f_a (f_a the complement directions).
Mat dexp_series(const LieAlgebra& ambient, const Vec& z) {
  const int dim = ambient.dim();
  Mat b = -ambient.ad(z);
  Mat term = Mat::Identity(dim, dim);
  Mat sum = term;
  for (int p = 1; p <= kDexpTerms; ++p) {
    term = term * b / static_cast<double>(p + 1);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17) break;
  }
  return sum;
}

Mat dexp_series_derivative(const LieAlgebra& ambient, const Vec& z,
                           const Vec& dz) {
  // d/dt of sum_p (-ad_{z + t dz})^p/(p+1)! at t = 0:
  //   sum_p 1/(p+1)! sum_{q<p} B^q C B^{p-1-q},  B = -ad_z, C = -ad_dz
  const int dim = ambient.dim();
  Mat b = -ambient.ad(z);
  Mat c = -ambient.ad(dz);
  double cnorm = c.cwiseAbs().maxCoeff();

  std::vector<Mat> pow = {Mat::Identity(dim, dim)};
  std::vector<double> pow_norm = {1.0};

  Mat out = Mat::Zero(dim, dim);
  double factorial = 1.0;  // (p+1)!
  for (int p = 1; p <= kDexpTerms; ++p) {
    factorial *= (p + 1);
    pow.push_back(pow.back() * b);
    pow_norm.push_back(pow.back().cwiseAbs().maxCoeff());
    Mat inner = Mat::Zero(dim, dim);
    // term-p bound; with nilpotent B the pairwise products vanish exactly
    // once both exponents pass the nilpotency index
    double pair_bound = 0.0;
    for (int q = 0; q < p; ++q) {
      pair_bound = std::max(pair_bound, pow_norm[q] * pow_norm[p - 1 - q]);
      inner += pow[q] * c * pow[p - 1 - q];
    }
    out += inner / factorial;
    if (static_cast<double>(dim) * p * pair_bound * cnorm / factorial < 1e-18)
      break;
  }
  return out;
}

}  // namespace

LocalTriple real_form_triple(const RealFormDecomposition& rf,
                             const ScenarioOptions& opts) {
  const int n = rf.form_dim();
  LieAlgebraPtr ambient = rf.ambient()->algebra();
  LieAlgebraPtr form_alg = rf.form()->algebra();

  Vec lo = Vec::Constant(n, -0.6);
  Vec hi = Vec::Constant(n, 0.6);
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  Chart chart(names, lo, hi);

  // exp guard: the slice stays well inside the injectivity radius
  require(hi.norm() <= 1.5, ErrorCode::InvalidArgument,
          "slice chart radius exceeds the exponential guard");

  auto ambient_coords = [n](const Vec& x) {
    Vec z = Vec::Zero(2 * n);
    z.tail(n) = x;
    return z;
  };

  // omega rows in ambient coordinates; row j = D(z) f_j
  auto omega_rows = [ambient, ambient_coords, n](const Vec& x) -> Mat {
    Mat d = dexp_series(*ambient, ambient_coords(x));
    Mat rows(n, 2 * n);
    for (int j = 0; j < n; ++j) rows.row(j) = d.col(n + j).transpose();
    return rows;
  };

  auto split_rows = [n](const Mat& omega, bool alpha_part) -> Mat {
    // omega = theta - i alpha: theta rows are the h-components,
    // alpha rows the negated ih-components
    Mat out(n, n);
    for (int j = 0; j < n; ++j)
      out.row(j) = alpha_part ? (-omega.row(j).tail(n)).eval()
                              : omega.row(j).head(n).eval();
    return out;
  };

  OneForm::ValueFn alpha_value = [omega_rows, split_rows](const Vec& x) -> Mat {
    return split_rows(omega_rows(x), true);
  };
  OneForm::ValueFn conn_value = [omega_rows, split_rows](const Vec& x) -> Mat {
    return split_rows(omega_rows(x), false);
  };

  OneForm::DerivFn alpha_deriv, conn_deriv;
  if (opts.closed_form_derivatives) {
    auto domega_rows = [ambient, ambient_coords, n](const Vec& x,
                                                    int axis) -> Mat {
      Vec dz = Vec::Zero(2 * n);
      dz[n + axis] = 1.0;
      Mat dd = dexp_series_derivative(*ambient, ambient_coords(x), dz);
      Mat rows(n, 2 * n);
      for (int j = 0; j < n; ++j) rows.row(j) = dd.col(n + j).transpose();
      return rows;
    };
    alpha_deriv = [domega_rows, split_rows](const Vec& x, int axis) -> Mat {
      return split_rows(domega_rows(x, axis), true);
    };
    conn_deriv = [domega_rows, split_rows](const Vec& x, int axis) -> Mat {
      return split_rows(domega_rows(x, axis), false);
    };
  }

  FdPolicy fd{opts.fd_base};
  OneForm alpha(chart, form_alg, alpha_value, alpha_deriv, fd);
  OneForm conn(chart, form_alg, conn_value, conn_deriv, fd);

  std::string name =
      form_alg->name() == "su(2)" ? "su2-sl2c"
      : form_alg->name() == "sl(2,R)" ? "sl2r-sl2c"
                                      : form_alg->name() + "-slice";
  LocalTriple t{name,
                chart,
                form_alg,
                rf.form(),
                TensorialOneForm(std::move(alpha)),
                LocalConnection(std::move(conn)),
                nullptr,
                true,
                std::numeric_limits<double>::quiet_NaN(),
                nlohmann::json{{"derivatives", opts.closed_form_derivatives
                                                   ? "closed-form"
                                                   : "finite-difference"},
                               {"fd_base", opts.fd_base}}};
  return t;
}

LocalTriple su2_lift(const LocalTriple& t) {
  require(t.algebra == so3_algebra(), ErrorCode::InvalidArgument,
          "su2_lift expects a triple with the canonical so(3) basis");

  // Differential of the double cover in the fixed bases: column b holds the
  // so(3) coordinates of ad_{e_b} on su(2).
  LieAlgebraPtr su2 = su2_algebra();
  Mat transport(3, 3);
  for (int b = 0; b < 3; ++b)
    transport.col(b) = so3_coords(su2->ad(Vec::Unit(3, b)));
  Mat inv_t = transport.inverse().transpose();

  auto lift_form = [&](const OneForm& f) {
    OneForm::ValueFn value = [f, inv_t](const Vec& x) -> Mat {
      return f.value(x) * inv_t;
    };
    OneForm::DerivFn deriv;
    if (f.mode() == DerivMode::ClosedForm)
      deriv = [f, inv_t](const Vec& x, int axis) -> Mat {
        return f.derivative(x, axis) * inv_t;
      };
    return OneForm(f.chart(), su2_algebra(), value, deriv, f.fd());
  };

  LocalTriple out = t;
  out.scenario = t.scenario + "-su2-lift";
  out.algebra = su2_algebra();
  out.group = su2_group();
  out.alpha = TensorialOneForm(lift_form(t.alpha.form()));
  out.connection = LocalConnection(lift_form(t.connection.form()));
  return out;
}

Mat frame_connection_form(const MetricChart& mc,
                          const std::function<Mat(const Vec&)>& frame,
                          const Vec& x) {
  const int m = mc.chart.dim();
  require(m == 3, ErrorCode::DimensionMismatch,
          "frame connection form is for 3-dimensional charts");
  Tensor3 gamma = levi_civita_oracle(mc, x);
  Mat f = frame(x).transpose();  // columns: frame vectors
  Mat finv = f.inverse();

  // dF[k]: derivative of the frame columns along d_k (4th-order stencil)
  std::vector<Mat> df(m);
  for (int k = 0; k < m; ++k) {
    double h = mc.fd_base * mc.chart.extent(k);
    mc.chart.require_inside(x, 2.0 * h);
    Vec xp = x, xm = x, xpp = x, xmm = x;
    xp[k] += h;
    xm[k] -= h;
    xpp[k] += 2.0 * h;
    xmm[k] -= 2.0 * h;
    df[k] = (-frame(xpp).transpose() + 8.0 * frame(xp).transpose() -
             8.0 * frame(xm).transpose() + frame(xmm).transpose()) /
            (12.0 * h);
  }

  Mat rows(m, 3);
  for (int k = 0; k < m; ++k) {
    // omega^i_j(d_k) = (F^{-1})^i_m (d_k F^m_j + Gamma^m_{kl} F^l_j)
    Mat w(m, m);
    Mat cov = df[k];
    for (int mm = 0; mm < m; ++mm)
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int l = 0; l < m; ++l) s += gamma(mm, k, l) * f(l, j);
        cov(mm, j) += s;
      }
    w = finv * cov;
    rows.row(k) = so3_coords(w).transpose();
  }
  return rows;
}

// ---- registry ------------------------------------------------------------

namespace {

std::map<std::string, double> frame_tolerances(double eq_tol) {
  return {{"eq1", eq_tol},           {"eq2", eq_tol},
          {"nijenhuis", 1e-4},       {"torsion", 1e-5},
          {"curvature_match", 1e-4}, {"gauge_equivariance", 1e-6},
          {"psi", 1e-6},             {"nomizu", 1e-4}};
}

std::vector<ScenarioInfo> build_registry() {
  std::vector<ScenarioInfo> reg;

  auto grid_box = [](double lo, double hi, double zlo, double zhi) {
    Vec l(3), h(3);
    l << lo, lo, zlo;
    h << hi, hi, zhi;
    return std::make_pair(l, h);
  };

  {
    ScenarioInfo s;
    s.name = "flat";
    s.description =
        "Euclidean frame bundle: alpha(d_j) = L_j, A = 0. Torsion-free but "
        "not integrable (kappa = 0); the second residual is 1 on frame pairs.";
    s.expected_integrable = false;
    s.kappa = 0.0;
    s.default_counts = {5, 5, 5};
    std::tie(s.default_lo, s.default_hi) = grid_box(-1, 1, -1, 1);
    s.default_tolerances = frame_tolerances(1e-6);
    s.checks = {"eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
                "gauge_equivariance", "psi"};
    reg.push_back(std::move(s));
  }
  {
    ScenarioInfo s;
    s.name = "hyperbolic-halfspace";
    s.description =
        "Orthonormal frame bundle of the half-space model (g = z^{-2} "
        "delta): the integrable constant-curvature case (kappa = -1).";
    s.expected_integrable = true;
    s.kappa = -1.0;
    s.default_counts = {5, 5, 5};
    std::tie(s.default_lo, s.default_hi) = grid_box(-1, 1, 0.5, 2.0);
    s.default_tolerances = frame_tolerances(1e-6);
    s.checks = {"eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
                "gauge_equivariance", "psi"};
    reg.push_back(std::move(s));
  }
  {
    ScenarioInfo s;
    s.name = "sl2r-sl2c";
    s.description =
        "Slice triple of the real form SL(2,R) of SL(2,C); integrable, "
        "non-compact structure group (residual norms use coordinate norms).";
    s.expected_integrable = true;
    s.default_counts = {11, 11, 11};
    s.default_lo = Vec::Constant(3, -0.5);
    s.default_hi = Vec::Constant(3, 0.5);
    s.default_tolerances = frame_tolerances(1e-5);
    s.checks = {"eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
                "gauge_equivariance", "nomizu"};
    reg.push_back(std::move(s));
  }
  {
    ScenarioInfo s;
    s.name = "sphere";
    s.description =
        "Frame bundle of the round 3-sphere in a stereographic chart "
        "(kappa = +1); not integrable, residual 2 on orthonormal pairs.";
    s.expected_integrable = false;
    s.kappa = 1.0;
    s.default_counts = {5, 5, 5};
    s.default_lo = Vec::Constant(3, -0.6);
    s.default_hi = Vec::Constant(3, 0.6);
    s.default_tolerances = frame_tolerances(1e-6);
    s.checks = {"eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
                "gauge_equivariance", "psi"};
    reg.push_back(std::move(s));
  }
  {
    ScenarioInfo s;
    s.name = "su2-sl2c";
    s.description =
        "Slice triple of the real form SU(2) of SL(2,C); integrable, and the "
        "moduli-map metric has sectional curvature -1 near the origin.";
    s.expected_integrable = true;
    s.default_counts = {11, 11, 11};
    s.default_lo = Vec::Constant(3, -0.5);
    s.default_hi = Vec::Constant(3, 0.5);
    s.default_tolerances = frame_tolerances(1e-5);
    s.checks = {"eq1", "eq2", "nijenhuis", "torsion", "curvature_match",
                "gauge_equivariance", "psi", "nomizu"};
    reg.push_back(std::move(s));
  }
  return reg;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> reg = build_registry();
  return reg;
}

const ScenarioInfo* find_scenario(const std::string& name) {
  for (const auto& s : scenario_registry())
    if (s.name == name) return &s;
  return nullptr;
}

LocalTriple make_scenario(const std::string& name,
                          const nlohmann::json& params) {
  const ScenarioInfo* info = find_scenario(name);
  require(info != nullptr, ErrorCode::UnknownScenario,
          "unknown scenario \"" + name + "\"");

  ScenarioOptions opts;
  if (params.is_object()) {
    if (params.contains("derivatives")) {
      std::string mode = params.at("derivatives").get<std::string>();
      require(mode == "closed-form" || mode == "finite-difference",
              ErrorCode::InvalidArgument,
              "\"derivatives\" must be \"closed-form\" or "
              "\"finite-difference\"");
      opts.closed_form_derivatives = (mode == "closed-form");
    }
    if (params.contains("fd_base")) {
      opts.fd_base = params.at("fd_base").get<double>();
      require(opts.fd_base > 0.0 && opts.fd_base < 0.05,
              ErrorCode::InvalidArgument, "\"fd_base\" out of range");
    }
  }

  if (name == "flat")
    return constant_curvature_triple(0.0, CurvatureModel::Flat, opts);
  if (name == "sphere")
    return constant_curvature_triple(1.0, CurvatureModel::Sphere, opts);
  if (name == "hyperbolic-halfspace")
    return constant_curvature_triple(-1.0, CurvatureModel::Halfspace, opts);
  if (name == "su2-sl2c") return real_form_triple(su2_in_sl2c(), opts);
  if (name == "sl2r-sl2c") return real_form_triple(sl2r_in_sl2c(), opts);
  fail(ErrorCode::Internal, "scenario registered but not constructible");
}

nlohmann::json scenario_listing_json() {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : scenario_registry()) {
    nlohmann::json doc;
    doc["name"] = s.name;
    doc["description"] = s.description;
    doc["expected_integrable"] = s.expected_integrable;
    if (std::isfinite(s.kappa)) doc["kappa"] = s.kappa;
    doc["default_grid"] = {
        {"counts", s.default_counts},
        {"lo", std::vector<double>(s.default_lo.data(),
                                   s.default_lo.data() + s.default_lo.size())},
        {"hi", std::vector<double>(s.default_hi.data(),
                                   s.default_hi.data() + s.default_hi.size())}};
    doc["default_tolerances"] = s.default_tolerances;
    doc["checks"] = s.checks;
    doc["params"] = {
        {"derivatives",
         {{"type", "string"},
          {"enum", {"closed-form", "finite-difference"}},
          {"default", "closed-form"}}},
        {"fd_base",
         {{"type", "number"}, {"default", 1e-4}, {"exclusiveMinimum", 0.0}}}};
    list.push_back(std::move(doc));
  }
  return nlohmann::json{{"scenarios", std::move(list)}};
}

}  // namespace zentner
