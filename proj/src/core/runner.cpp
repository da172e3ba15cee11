#include "core/runner.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace zentner {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "eq1",     "eq2",
      "nijenhuis", "torsion",
      "curvature_match", "gauge_equivariance",
      "psi",     "nomizu"};
  return names;
}

RunConfig RunConfig::from_json(const nlohmann::json& doc) {
  RunConfig cfg;
  try {
    require(doc.is_object(), ErrorCode::JsonFormat,
            "run config must be a JSON object");
    if (doc.contains("scenario")) cfg.scenario = doc.at("scenario").get<std::string>();
    if (doc.contains("grid")) {
      const auto& g = doc.at("grid");
      if (g.contains("counts"))
        cfg.grid_counts = g.at("counts").get<std::vector<int>>();
      auto read_vec = [&](const char* key) -> std::optional<Vec> {
        if (!g.contains(key)) return std::nullopt;
        auto v = g.at(key).get<std::vector<double>>();
        return Vec(Eigen::Map<const Vec>(v.data(), v.size()));
      };
      cfg.grid_lo = read_vec("lo");
      cfg.grid_hi = read_vec("hi");
    }
    if (doc.contains("tol"))
      cfg.tolerances = doc.at("tol").get<std::map<std::string, double>>();
    if (doc.contains("checks"))
      cfg.checks = doc.at("checks").get<std::vector<std::string>>();
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("params")) cfg.scenario_params = doc.at("params");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::JsonFormat, std::string("bad run config: ") + e.what());
  }
  return cfg;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json doc;
  doc["scenario"] = scenario;
  nlohmann::json grid;
  if (!grid_counts.empty()) grid["counts"] = grid_counts;
  if (grid_lo)
    grid["lo"] = std::vector<double>(grid_lo->data(),
                                     grid_lo->data() + grid_lo->size());
  if (grid_hi)
    grid["hi"] = std::vector<double>(grid_hi->data(),
                                     grid_hi->data() + grid_hi->size());
  doc["grid"] = grid;
  doc["tol"] = tolerances;
  doc["checks"] = checks;
  doc["seed"] = seed;
  if (!scenario_params.is_null()) doc["params"] = scenario_params;
  return doc;
}

namespace {

double tol_for(const ScenarioInfo& info, const RunConfig& cfg,
               const std::string& check) {
  auto it = cfg.tolerances.find(check);
  if (it != cfg.tolerances.end()) {
    require(it->second > 0.0, ErrorCode::InvalidArgument,
            "tolerance for " + check + " must be positive");
    return it->second;
  }
  auto dit = info.default_tolerances.find(check);
  require(dit != info.default_tolerances.end(), ErrorCode::Internal,
          "no default tolerance for " + check);
  return dit->second;
}

// ---- individual checks ---------------------------------------------------

CheckResult check_eq(const std::string& name, const ZentnerResiduals& res,
                     double tol) {
  CheckResult r;
  r.name = name;
  r.tol = tol;
  r.max_residual = (name == "eq1") ? res.max_r1 : res.max_r2;
  r.pass = r.max_residual <= tol;
  return r;
}

CheckResult check_nijenhuis(const LocalTriple& t, const std::vector<Vec>& grid,
                            double tol, std::uint64_t seed) {
  CheckResult r;
  r.name = "nijenhuis";
  r.tol = tol;
  std::vector<Vec> bases = subsample(grid, 9);
  const int n = t.algebra->dim();
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (const Vec& x : bases) {
    std::vector<Vec> fibers;
    fibers.push_back(Vec::Zero(n));
    for (int s = 0; s < 3; ++s) {
      Vec k(n);
      for (int a = 0; a < n; ++a) k[a] = uniform_in(eng, -1.0, 1.0);
      k *= 0.3 / std::max(1.0, k.norm());
      fibers.push_back(k);
    }
    for (const Vec& k : fibers) {
      NijenhuisSample s = nijenhuis(t, {x, k});
      worst = std::max(worst, s.max_abs / std::max(s.j_scale, 1e-12));
    }
  }
  r.max_residual = worst;
  r.pass = worst <= tol;
  std::ostringstream os;
  os << bases.size() << " base points, 4 fiber samples each; residual is "
     << "max |N| relative to the local J scale";
  r.message = os.str();
  return r;
}

CheckResult check_torsion(const LocalTriple& t, const std::vector<Vec>& grid,
                          double tol) {
  CheckResult r;
  r.name = "torsion";
  r.tol = tol;
  std::vector<Vec> pts = subsample(grid, 10);
  double worst = 0.0;
  for (const Vec& x : pts) {
    Tensor3 gamma = induced_christoffel(t, x);
    const int m = t.chart.dim();
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          worst = std::max(worst, std::abs(gamma(k, i, j) - gamma(k, j, i)));
  }
  r.max_residual = worst;
  r.pass = worst <= tol;
  r.message = std::to_string(pts.size()) + " sample points";
  return r;
}

CheckResult check_curvature_match(const LocalTriple& t,
                                  const std::vector<Vec>& grid, double tol) {
  CheckResult r;
  r.name = "curvature_match";
  r.tol = tol;
  std::vector<Vec> pts = subsample(grid, 10);
  double worst = 0.0;
  for (const Vec& x : pts) {
    InducedConnectionSample s = induced_connection(t, x);
    worst = std::max(worst, s.curvature_mismatch());
  }
  r.max_residual = worst;
  r.pass = worst <= tol;
  r.message = std::to_string(pts.size()) +
              " sample points; finite-difference curvature of the induced "
              "connection vs the algebraic formula";
  return r;
}

CheckResult check_gauge(const LocalTriple& t, const std::vector<Vec>& grid,
                        double tol, std::uint64_t seed) {
  CheckResult r;
  r.name = "gauge_equivariance";
  r.tol = tol;
  require(t.group != nullptr, ErrorCode::InvalidArgument,
          "gauge check needs a matrix realization of the structure group");

  const int n = t.algebra->dim();
  const int m = t.chart.dim();

  // second tensorial form for the wedge identity: scaled alpha plus a
  // seeded constant form
  std::mt19937_64 eng(seed * 977 + 13);
  Mat shift(m, n);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < n; ++a) shift(i, a) = uniform_in(eng, -0.3, 0.3);
  OneForm alpha2_form(
      t.chart, t.algebra,
      [base = t.alpha.form(), shift](const Vec& x) -> Mat {
        return 0.5 * base.value(x) + shift;
      },
      nullptr, t.alpha.form().fd());
  TensorialOneForm alpha2(alpha2_form);

  TwoForm omega = curvature(t.connection);
  TwoForm dalpha = covariant_exterior_derivative(t.alpha, t.connection);
  TwoForm wedge = wedge_bracket(t.alpha.form(), alpha2.form());
  ZentnerResiduals base_res = zentner_residuals(t, grid);

  double worst = 0.0;
  const int num_transformations = 5;
  for (int hidx = 0; hidx < num_transformations; ++hidx) {
    GaugeTransformation h =
        random_gauge(t.chart, t.group, seed * 10 + hidx);
    LocalTriple tprime = gauge_act(h, t);
    TensorialOneForm alpha2prime = gauge_transform(h, alpha2);
    LocalConnection sum_conn = t.connection + alpha2.form();
    LocalConnection sum_prime = gauge_transform(h, sum_conn);

    TwoForm omega_prime = curvature(tprime.connection);
    TwoForm dalpha_prime =
        covariant_exterior_derivative(tprime.alpha, tprime.connection);
    TwoForm wedge_prime =
        wedge_bracket(tprime.alpha.form(), alpha2prime.form());

    std::vector<double> devs(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t p) {
      const Vec& x = grid[p];
      Mat ad = t.group->Ad_matrix(h.value(x));
      double d = 0.0;

      auto conj_diff = [&](const TwoFormValue& prime, const TwoFormValue& base) {
        double worst_pair = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            Vec expect = ad * base.at(i, j);
            worst_pair = std::max(
                worst_pair, (prime.at(i, j) - expect).cwiseAbs().maxCoeff());
          }
        return worst_pair;
      };

      // Omega_{f(A)} = f(Omega_A)
      d = std::max(d, conj_diff(omega_prime.value(x), omega.value(x)));
      // d_{f(A)} f(alpha) = f(d_A alpha)
      d = std::max(d, conj_diff(dalpha_prime.value(x), dalpha.value(x)));
      // f([alpha ^ alpha2]) = [f(alpha) ^ f(alpha2)]
      d = std::max(d, conj_diff(wedge_prime.value(x), wedge.value(x)));
      // f(A + alpha2) = f(A) + f(alpha2)
      Mat lhs = sum_prime.form().value(x);
      Mat rhs = tprime.connection.form().value(x) + alpha2prime.form().value(x);
      d = std::max(d, (lhs - rhs).cwiseAbs().maxCoeff());
      devs[p] = d;
    });
    for (double d : devs) worst = std::max(worst, d);

    // residual norms are gauge invariant
    ZentnerResiduals prime_res = zentner_residuals(tprime, grid);
    for (std::size_t p = 0; p < grid.size(); ++p) {
      worst = std::max(worst,
                       std::abs(prime_res.points[p].r1 - base_res.points[p].r1));
      worst = std::max(worst,
                       std::abs(prime_res.points[p].r2 - base_res.points[p].r2));
    }
  }
  r.max_residual = worst;
  r.pass = worst <= tol;
  r.message = std::to_string(num_transformations) +
              " seeded gauge transformations; all four naturality identities "
              "plus residual-norm invariance";
  return r;
}

CheckResult check_psi(const LocalTriple& t, const ScenarioInfo& info,
                      const std::vector<Vec>& grid, double tol,
                      std::uint64_t seed) {
  CheckResult r;
  r.name = "psi";
  r.tol = tol;

  PsiResult psi = metric_orientation_psi(t, grid);
  MetricChart recovered = recovered_metric(t);

  double worst = 0.0;
  std::ostringstream msg;
  msg << "orientation " << (psi.orientation > 0 ? "+1" : "-1");

  // frame scenarios: the recovered metric must reproduce the defining metric
  if (std::isfinite(info.kappa)) {
    MetricChart defining = scenario_metric(
        info.name == "flat" ? CurvatureModel::Flat
        : info.name == "sphere" ? CurvatureModel::Sphere
                                : CurvatureModel::Halfspace);
    double dev = 0.0;
    for (const auto& s : psi.samples)
      dev = std::max(dev,
                     (s.metric - defining.metric_at(s.x)).cwiseAbs().maxCoeff());
    worst = std::max(worst, dev);
    msg << "; defining-metric deviation " << dev;
  }

  // sectional curvature of the recovered metric
  double expected_kappa = std::isfinite(info.kappa) ? info.kappa : -1.0;
  double sec_tol = std::isfinite(info.kappa) ? 1e-3 : 1e-2;
  std::vector<Vec> pts = subsample(grid, 5);
  std::mt19937_64 eng(seed * 31 + 7);
  double sec_dev = 0.0;
  for (const Vec& x : pts) {
    Vec u(t.chart.dim()), v(t.chart.dim());
    for (int i = 0; i < t.chart.dim(); ++i) {
      u[i] = uniform_in(eng, -1.0, 1.0);
      v[i] = uniform_in(eng, -1.0, 1.0);
    }
    double k = riemann_sectional_oracle(recovered, x, u, v);
    sec_dev = std::max(sec_dev, std::abs(k - expected_kappa));
  }
  require(sec_dev <= sec_tol, ErrorCode::Evaluation,
          "sectional curvature of the recovered metric deviates from " +
              std::to_string(expected_kappa) + " by " + std::to_string(sec_dev));
  msg << "; sectional curvature within " << sec_dev << " of "
      << expected_kappa;

  // gauge invariance of the recovered metric
  GaugeTransformation h = random_gauge(t.chart, t.group, seed * 10 + 877);
  LocalTriple tprime = gauge_act(h, t);
  PsiResult psi_prime = metric_orientation_psi(tprime, grid);
  double gdev = 0.0;
  for (std::size_t p = 0; p < psi.samples.size(); ++p)
    gdev = std::max(gdev, (psi.samples[p].metric - psi_prime.samples[p].metric)
                              .cwiseAbs()
                              .maxCoeff());
  worst = std::max(worst, gdev);
  msg << "; gauge deviation " << gdev;

  r.max_residual = worst;
  r.pass = worst <= tol;
  r.message = msg.str();
  return r;
}

CheckResult check_nomizu(const LocalTriple& t, const ScenarioInfo& info,
                         double tol, std::uint64_t seed) {
  CheckResult r;
  r.name = "nomizu";
  r.tol = tol;
  require(info.name == "su2-sl2c" || info.name == "sl2r-sl2c",
          ErrorCode::InvalidArgument,
          "the nomizu check applies to the real-form scenarios");
  RealFormDecomposition rf =
      info.name == "su2-sl2c" ? su2_in_sl2c() : sl2r_in_sl2c();
  ReductivePair pair = real_form_pair(rf);
  const int n = rf.form_dim();

  // real-form pairs have [ih, ih] in h, so the torsion vanishes exactly
  std::mt19937_64 eng(seed * 131 + 3);
  double torsion_max = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = Vec::Zero(2 * n), y = Vec::Zero(2 * n);
    for (int a = 0; a < n; ++a) {
      x[n + a] = uniform_in(eng, -1.0, 1.0);
      y[n + a] = uniform_in(eng, -1.0, 1.0);
    }
    auto [torsion, curv] = pair.nomizu_tensors(x, y, x);
    torsion_max = std::max(torsion_max, torsion.cwiseAbs().maxCoeff());
  }
  require(torsion_max == 0.0, ErrorCode::Evaluation,
          "real-form Nomizu torsion must vanish exactly, got " +
              std::to_string(torsion_max));

  // R(X,Y)Z matches the slice triple's algebraic curvature at the origin
  // under the identification d_j <-> i e_j
  Vec origin = Vec::Zero(n);
  InducedConnectionSample s = induced_connection(t, origin);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec x = Vec::Unit(2 * n, n + i), y = Vec::Unit(2 * n, n + j),
            z = Vec::Unit(2 * n, n + k);
        auto [torsion, curv] = pair.nomizu_tensors(x, y, z);
        require(pair.in_m_span(curv, 1e-12), ErrorCode::Evaluation,
                "Nomizu curvature left the complement");
        for (int l = 0; l < n; ++l)
          worst = std::max(worst, std::abs(curv[n + l] -
                                           s.curvature_algebraic(l, k, i, j)));
      }
  r.max_residual = worst;
  r.pass = worst <= tol;
  r.message =
      "torsion exactly zero on 20 random pairs; curvature compared at the "
      "slice origin";
  return r;
}

}  // namespace

VerificationReport run_checks(const RunConfig& config) {
  LocalTriple triple = make_scenario(config.scenario, config.scenario_params);
  return run_checks(triple, config);
}

VerificationReport run_checks(const LocalTriple& triple,
                              const RunConfig& config) {
  const ScenarioInfo* info = find_scenario(config.scenario.empty()
                                               ? triple.scenario
                                               : config.scenario);
  require(info != nullptr, ErrorCode::UnknownScenario,
          "unknown scenario \"" + config.scenario + "\"");

  // grid
  GridSpec spec;
  spec.counts = config.grid_counts.empty() ? info->default_counts
                                           : config.grid_counts;
  spec.lo = config.grid_lo ? config.grid_lo
                           : std::optional<Vec>(info->default_lo);
  spec.hi = config.grid_hi ? config.grid_hi
                           : std::optional<Vec>(info->default_hi);
  std::vector<Vec> grid = make_grid(triple.chart, spec);

  // checks: defaults are the scenario's applicable set, canonical order
  std::vector<std::string> selected =
      config.checks.empty() ? info->checks : config.checks;
  for (const auto& c : selected)
    require(std::find(known_checks().begin(), known_checks().end(), c) !=
                known_checks().end(),
            ErrorCode::InvalidArgument, "unknown check \"" + c + "\"");
  // canonical order, drop duplicates
  std::vector<std::string> ordered;
  for (const auto& c : known_checks())
    if (std::find(selected.begin(), selected.end(), c) != selected.end())
      ordered.push_back(c);

  VerificationReport report;
  report.scenario = info->name;
  report.seed = config.seed;
  report.grid_echo = {
      {"counts", spec.counts},
      {"lo", std::vector<double>(spec.lo->data(),
                                 spec.lo->data() + spec.lo->size())},
      {"hi", std::vector<double>(spec.hi->data(),
                                 spec.hi->data() + spec.hi->size())}};
  nlohmann::json tols;
  for (const auto& c : ordered) tols[c] = tol_for(*info, config, c);
  report.tolerances = tols;

  bool needs_residuals =
      std::find(ordered.begin(), ordered.end(), "eq1") != ordered.end() ||
      std::find(ordered.begin(), ordered.end(), "eq2") != ordered.end();
  ZentnerResiduals residuals;
  if (needs_residuals) {
    residuals = zentner_residuals(triple, grid);
    report.per_point = residuals.points;
    report.max_r1 = residuals.max_r1;
    report.max_r2 = residuals.max_r2;
    report.has_residuals = true;
  }

  for (const auto& name : ordered) {
    CheckResult result;
    try {
      double tol = tol_for(*info, config, name);
      if (name == "eq1" || name == "eq2") {
        result = check_eq(name, residuals, tol);
      } else if (name == "nijenhuis") {
        result = check_nijenhuis(triple, grid, tol, config.seed);
      } else if (name == "torsion") {
        result = check_torsion(triple, grid, tol);
      } else if (name == "curvature_match") {
        result = check_curvature_match(triple, grid, tol);
      } else if (name == "gauge_equivariance") {
        result = check_gauge(triple, grid, tol, config.seed);
      } else if (name == "psi") {
        result = check_psi(triple, *info, grid, tol, config.seed);
      } else if (name == "nomizu") {
        result = check_nomizu(triple, *info, tol, config.seed);
      } else {
        fail(ErrorCode::Internal, "unhandled check " + name);
      }
    } catch (const Error& e) {
      result.name = name;
      result.pass = false;
      result.error = true;
      result.message = e.what();
    } catch (const std::exception& e) {
      result.name = name;
      result.pass = false;
      result.error = true;
      result.message = e.what();
    }
    report.checks.push_back(std::move(result));
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["scenario"] = scenario;
  doc["grid"] = grid_echo;
  doc["tolerances"] = tolerances;
  doc["seed"] = seed;
  if (has_residuals) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : per_point) {
      pts.push_back(
          {{"x", std::vector<double>(p.x.data(), p.x.data() + p.x.size())},
           {"r1", p.r1},
           {"r2", p.r2}});
    }
    doc["per_point"] = std::move(pts);
    doc["max_norms"] = {{"eq1", max_r1}, {"eq2", max_r2}};
  } else {
    doc["per_point"] = nlohmann::json::array();
    doc["max_norms"] = nlohmann::json::object();
  }
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json checks_doc = nlohmann::json::array();
  for (const auto& c : checks) {
    verdicts[c.name] = c.pass;
    checks_doc.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"error", c.error},
                          {"max_residual", c.max_residual},
                          {"tol", c.tol},
                          {"message", c.message}});
  }
  doc["verdicts"] = std::move(verdicts);
  doc["checks"] = std::move(checks_doc);
  doc["all_pass"] = all_pass;
  return doc;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL")
       << " max_residual=" << c.max_residual << " tol=" << c.tol;
    if (c.error) os << " error=\"" << c.message << "\"";
    os << "\n";
  }
  return os.str();
}

}  // namespace zentner
