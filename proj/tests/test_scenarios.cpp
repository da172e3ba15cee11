#include <doctest.h>

#include <cmath>
#include <random>

#include "core/scenarios.hpp"
#include "oracles.hpp"

using namespace zentner;

namespace {

Vec random_vec(std::mt19937_64& eng, int n, double scale = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform_in(eng, -scale, scale);
  return v;
}

std::vector<Vec> default_grid(const LocalTriple& t, int count) {
  const ScenarioInfo* info = find_scenario(t.scenario);
  REQUIRE(info != nullptr);
  GridSpec spec{std::vector<int>(t.chart.dim(), count), info->default_lo,
                info->default_hi};
  return make_grid(t.chart, spec);
}

}  // namespace

TEST_CASE("constant-curvature constructors") {
  CHECK_THROWS_AS(constant_curvature_triple(0.5, CurvatureModel::Sphere),
                  Error);
  CHECK_THROWS_AS(constant_curvature_triple(-1.0, CurvatureModel::Flat),
                  Error);

  SUBCASE("half-space frame at z = 1 is the identity coframe") {
    LocalTriple t = constant_curvature_triple(-1.0, CurvatureModel::Halfspace);
    Vec x(3);
    x << 0.0, 0.0, 1.0;
    CHECK((t.alpha.form().value(x) - Mat::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
    CHECK(admissibility(t.alpha, x).det == doctest::Approx(1.0));
  }

  SUBCASE("flat frame everywhere") {
    LocalTriple t = constant_curvature_triple(0.0, CurvatureModel::Flat);
    std::mt19937_64 eng(51);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(eng, 3);
      CHECK((t.alpha.form().value(x) - Mat::Identity(3, 3))
                .cwiseAbs()
                .maxCoeff() == 0.0);
      CHECK(t.connection.form().value(x).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("Levi-Civita oracle") {
  SUBCASE("Euclidean metric has no Christoffel symbols") {
    MetricChart mc = scenario_metric(CurvatureModel::Flat);
    Tensor3 gamma = levi_civita_oracle(mc, Vec::Zero(3));
    CHECK(gamma.max_abs() <= 1e-12);
  }

  SUBCASE("half-space values frozen from the hand computation") {
    MetricChart mc = scenario_metric(CurvatureModel::Halfspace);
    Vec x(3);
    x << 0.0, 0.0, 1.0;
    Tensor3 gamma = levi_civita_oracle(mc, x);
    CHECK(gamma(0, 0, 2) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(gamma(2, 0, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gamma(2, 2, 2) == doctest::Approx(-1.0).epsilon(1e-9));
    // full comparison against the closed-form reference
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(std::abs(gamma(k, i, j) -
                         oracles::halfspace_christoffel(k, i, j, 1.0)) <=
                1e-9);
    // symmetry in the lower indices
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(gamma(k, i, j) == doctest::Approx(gamma(k, j, i)));
  }

  SUBCASE("constant rescalings do not change the symbols") {
    MetricChart mc = scenario_metric(CurvatureModel::Halfspace);
    MetricChart scaled = mc;
    auto base_g = mc.g;
    auto base_dg = mc.dg;
    scaled.g = [base_g](const Vec& x) { return 9.0 * base_g(x); };
    scaled.dg = [base_dg](const Vec& x, int k) { return 9.0 * base_dg(x, k); };
    Vec x(3);
    x << 0.2, -0.3, 0.9;
    Tensor3 a = levi_civita_oracle(mc, x);
    Tensor3 b = levi_civita_oracle(scaled, x);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(a(k, i, j) == doctest::Approx(b(k, i, j)).epsilon(1e-10));
  }

  SUBCASE("singular metric is rejected") {
    Chart c({"u", "v"}, Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
    MetricChart degenerate{
        c, [](const Vec&) { return Mat::Zero(2, 2); }, nullptr, +1, 5e-4};
    CHECK_THROWS_AS(levi_civita_oracle(degenerate, Vec::Zero(2)), Error);
  }
}

TEST_CASE("sectional curvature oracle") {
  std::mt19937_64 eng(52);

  SUBCASE("Euclidean space is flat") {
    MetricChart mc = scenario_metric(CurvatureModel::Flat);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(eng, 3, 0.8);
      CHECK(std::abs(riemann_sectional_oracle(mc, x, random_vec(eng, 3),
                                              random_vec(eng, 3))) <= 1e-6);
    }
  }

  SUBCASE("half-space has curvature -1, the sphere chart +1") {
    MetricChart hs = scenario_metric(CurvatureModel::Halfspace);
    MetricChart sp = scenario_metric(CurvatureModel::Sphere);
    for (int trial = 0; trial < 10; ++trial) {
      Vec xh = random_vec(eng, 3, 0.7);
      xh[2] = uniform_in(eng, 0.6, 1.8);
      CHECK(std::abs(riemann_sectional_oracle(hs, xh, random_vec(eng, 3),
                                              random_vec(eng, 3)) +
                     1.0) <= 1e-3);
      Vec xs = random_vec(eng, 3, 0.5);
      CHECK(std::abs(riemann_sectional_oracle(sp, xs, random_vec(eng, 3),
                                              random_vec(eng, 3)) -
                     1.0) <= 1e-3);
    }
  }

  SUBCASE("degenerate planes are rejected") {
    MetricChart mc = scenario_metric(CurvatureModel::Flat);
    Vec u = Vec::Unit(3, 0);
    CHECK_THROWS_AS(
        riemann_sectional_oracle(mc, Vec::Zero(3), u, Vec(2.0 * u)), Error);
  }
}

TEST_CASE("scenario connection matches the Levi-Civita oracle in the frame") {
  LocalTriple t = make_scenario("hyperbolic-halfspace");
  MetricChart mc = scenario_metric(CurvatureModel::Halfspace);
  std::mt19937_64 eng(53);
  for (int trial = 0; trial < 10; ++trial) {
    Vec x(3);
    x << uniform_in(eng, -0.8, 0.8), uniform_in(eng, -0.8, 0.8),
        uniform_in(eng, 0.6, 1.9);
    Mat from_oracle = frame_connection_form(mc, t.frame, x);
    Mat from_scenario = t.connection.form().value(x);
    CHECK((from_oracle - from_scenario).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("frame scenarios satisfy the structural identities") {
  for (const char* name : {"flat", "sphere", "hyperbolic-halfspace"}) {
    LocalTriple t = make_scenario(name);
    const ScenarioInfo* info = find_scenario(name);
    CAPTURE(name);

    TwoForm d = covariant_exterior_derivative(t.alpha, t.connection);
    TwoForm omega = curvature(t.connection);
    TwoForm wedge = wedge_bracket(t.alpha.form(), t.alpha.form());
    for (const Vec& x : default_grid(t, 3)) {
      // d^nabla alpha = 0 for every kappa
      CHECK(form_norm(*t.algebra, d.value(x)) <= 1e-9);
      // curvature = -(kappa/2) [alpha ^ alpha]
      TwoFormValue lhs = omega.value(x);
      TwoFormValue rhs = wedge.value(x);
      rhs *= -info->kappa / 2.0;
      lhs -= rhs;
      CHECK(form_norm(*t.algebra, lhs) <= 1e-4);
    }
  }
}

TEST_CASE("real-form slice triples") {
  SUBCASE("values at the origin are forced by the parametrization") {
    for (auto rf : {su2_in_sl2c(), sl2r_in_sl2c()}) {
      LocalTriple t = real_form_triple(rf);
      Vec origin = Vec::Zero(3);
      CHECK(t.connection.form().value(origin).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK((t.alpha.form().value(origin) + Mat::Identity(3, 3))
                .cwiseAbs()
                .maxCoeff() <= 1e-14);
    }
  }

  SUBCASE("residuals vanish on the slice grid") {
    for (const char* name : {"su2-sl2c", "sl2r-sl2c"}) {
      LocalTriple t = make_scenario(name);
      CAPTURE(name);
      ZentnerResiduals res = zentner_residuals(t, default_grid(t, 5));
      CHECK(res.max_r1 <= 1e-5);
      CHECK(res.max_r2 <= 1e-5);
    }
  }

  SUBCASE("pulled-back connection form reproduces fiber generators") {
    RealFormDecomposition rf = su2_in_sl2c();
    LocalTriple t = real_form_triple(rf);
    auto sl2c = rf.ambient();
    std::mt19937_64 eng(54);
    const double h = 1e-6;
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(eng, 3, 0.4);
      Vec e = random_vec(eng, 3, 1.0);
      // sigma(x) exp(s e): theta of the s-derivative at 0 must be e
      Vec slice_coords = Vec::Zero(6);
      slice_coords.tail(3) = x;
      CMat sigma = sl2c->exp_coords(slice_coords);
      CMat gen = rf.form()->matrix_of(e);
      CMat cp = sigma * matrix_exp(CMat(h * gen));
      CMat cm = sigma * matrix_exp(CMat(-h * gen));
      CMat velocity = (cp - cm) / (2.0 * h);
      auto [theta, alpha] = rf.split(CMat(sigma.inverse() * velocity));
      CHECK((theta - e).cwiseAbs().maxCoeff() <= 1e-6);
      CHECK(alpha.cwiseAbs().maxCoeff() <= 1e-6);
    }
  }

  SUBCASE("the su(2) slice metric is hyperbolic near the origin") {
    LocalTriple t = make_scenario("su2-sl2c");
    MetricChart rec = recovered_metric(t);
    std::mt19937_64 eng(55);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(eng, 3, 0.25);
      double k = riemann_sectional_oracle(rec, x, random_vec(eng, 3),
                                          random_vec(eng, 3));
      CHECK(std::abs(k + 1.0) <= 1e-2);
    }
  }
}

TEST_CASE("reductive pairs and the invariant-connection tensors") {
  SUBCASE("real-form pair: torsion vanishes identically") {
    ReductivePair pair = real_form_pair(su2_in_sl2c());
    std::mt19937_64 eng(56);
    for (int trial = 0; trial < 20; ++trial) {
      Vec x = Vec::Zero(6), y = Vec::Zero(6), z = Vec::Zero(6);
      x.tail(3) = random_vec(eng, 3);
      y.tail(3) = random_vec(eng, 3);
      z.tail(3) = random_vec(eng, 3);
      auto [torsion, curv] = pair.nomizu_tensors(x, y, z);
      CHECK(torsion.cwiseAbs().maxCoeff() == 0.0);
      CHECK(pair.in_m_span(curv));
    }
  }

  SUBCASE("degenerate pair h = 0: torsion is minus the bracket") {
    auto so3 = so3_algebra();
    ReductivePair pair(so3, {}, {0, 1, 2});
    std::mt19937_64 eng(57);
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = random_vec(eng, 3), y = random_vec(eng, 3);
      auto [torsion, curv] = pair.nomizu_tensors(x, y, x);
      CHECK((torsion + so3->bracket(x, y)).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK(curv.cwiseAbs().maxCoeff() == 0.0);
    }
  }

  SUBCASE("curvature matches the slice triple at the origin") {
    ReductivePair pair = real_form_pair(su2_in_sl2c());
    LocalTriple t = make_scenario("su2-sl2c");
    InducedConnectionSample s = induced_connection(t, Vec::Zero(3));
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          auto [torsion, curv] = pair.nomizu_tensors(
              Vec::Unit(6, 3 + i), Vec::Unit(6, 3 + j), Vec::Unit(6, 3 + k));
          for (int l = 0; l < 3; ++l)
            dev = std::max(dev, std::abs(curv[3 + l] -
                                         s.curvature_algebraic(l, k, i, j)));
        }
    CHECK(dev <= 1e-4);
  }

  SUBCASE("validation") {
    auto so3 = so3_algebra();
    // {L1, L2} is not a subalgebra of so(3)
    CHECK_THROWS_AS(ReductivePair(so3, {0, 1}, {2}), Error);
    ReductivePair pair = real_form_pair(su2_in_sl2c());
    Vec in_h = Vec::Unit(6, 0);
    CHECK_THROWS_AS(pair.nomizu_tensors(in_h, in_h, in_h), Error);
  }
}

TEST_CASE("su(2) lift of so(3) triples") {
  SUBCASE("flat lift carries the frame to the su(2) basis") {
    LocalTriple lifted = su2_lift(make_scenario("flat"));
    CHECK(lifted.algebra == su2_algebra());
    CHECK((lifted.alpha.form().value(Vec::Zero(3)) - Mat::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }

  SUBCASE("residuals are preserved by the lift") {
    LocalTriple t = make_scenario("hyperbolic-halfspace");
    LocalTriple lifted = su2_lift(t);
    ZentnerResiduals res = zentner_residuals(lifted, default_grid(t, 4));
    CHECK(res.max_r1 <= 1e-6);
    CHECK(res.max_r2 <= 1e-6);
  }

  SUBCASE("transporting back is the identity on components") {
    LocalTriple t = make_scenario("hyperbolic-halfspace");
    LocalTriple lifted = su2_lift(t);
    // the inverse differential transport: su(2) coords -> so(3) coords
    Mat transport(3, 3);
    for (int b = 0; b < 3; ++b)
      transport.col(b) = so3_coords(su2_algebra()->ad(Vec::Unit(3, b)));
    std::mt19937_64 eng(58);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x(3);
      x << uniform_in(eng, -1.0, 1.0), uniform_in(eng, -1.0, 1.0),
          uniform_in(eng, 0.5, 2.0);
      Mat back = lifted.alpha.form().value(x) * transport.transpose();
      CHECK((back - t.alpha.form().value(x)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("lifting a non-so(3) triple is an error") {
    CHECK_THROWS_AS(su2_lift(make_scenario("su2-sl2c")), Error);
  }
}

TEST_CASE("scenario registry") {
  const auto& reg = scenario_registry();
  REQUIRE(reg.size() == 5);
  for (std::size_t i = 1; i < reg.size(); ++i)
    CHECK(reg[i - 1].name < reg[i].name);

  CHECK(find_scenario("hyperbolic-halfspace") != nullptr);
  CHECK(find_scenario("su2-sl2c") != nullptr);
  CHECK(find_scenario("sl2r-sl2c") != nullptr);
  CHECK(find_scenario("nope") == nullptr);
  CHECK_THROWS_AS(make_scenario("nope"), Error);

  // listing is deterministic
  CHECK(scenario_listing_json().dump() == scenario_listing_json().dump());

  // parameters are honored and validated
  LocalTriple fd = make_scenario(
      "hyperbolic-halfspace",
      nlohmann::json{{"derivatives", "finite-difference"}});
  CHECK(fd.alpha.form().mode() == DerivMode::FiniteDifference);
  CHECK_THROWS_AS(
      make_scenario("flat", nlohmann::json{{"derivatives", "symbolic"}}),
      Error);
  CHECK_THROWS_AS(make_scenario("flat", nlohmann::json{{"fd_base", -1.0}}),
                  Error);
}
