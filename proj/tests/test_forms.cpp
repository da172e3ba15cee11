#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "core/forms.hpp"
#include "core/scenarios.hpp"

using namespace zentner;

namespace {

Chart unit_chart() {
  Vec lo = Vec::Constant(3, -1.0), hi = Vec::Constant(3, 1.0);
  return Chart({"x1", "x2", "x3"}, lo, hi);
}

Vec random_interior(std::mt19937_64& eng, const Chart& chart, double margin) {
  Vec x(chart.dim());
  for (int i = 0; i < chart.dim(); ++i)
    x[i] = uniform_in(eng, chart.lo()[i] + margin, chart.hi()[i] - margin);
  return x;
}

}  // namespace

TEST_CASE("chart validation") {
  Vec lo(2), hi(2);
  lo << 0, 0;
  hi << 1, 0;  // degenerate on the second axis
  CHECK_THROWS_AS(Chart({"a", "b"}, lo, hi), Error);

  Chart c = unit_chart();
  Vec inside = Vec::Zero(3), outside = Vec::Constant(3, 2.0);
  CHECK(c.contains(inside));
  CHECK(!c.contains(outside));
  CHECK_THROWS_AS(c.require_inside(outside), Error);
  Vec near_edge = Vec::Constant(3, 0.999);
  CHECK_THROWS_AS(c.require_inside(near_edge, 0.01), Error);
}

TEST_CASE("grid generation is deterministic and validated") {
  Chart c = unit_chart();
  GridSpec spec{{2, 2, 3}, std::nullopt, std::nullopt};
  auto pts = make_grid(c, spec);
  REQUIRE(pts.size() == 12);
  CHECK(pts.front() == c.lo());
  CHECK(pts.back() == c.hi());
  // last axis fastest
  CHECK(pts[1][2] == 0.0);
  CHECK(pts[1][0] == -1.0);

  CHECK_THROWS_AS(make_grid(c, GridSpec{{1, 2, 2}, {}, {}}), Error);
  GridSpec bad{{2, 2, 2}, Vec::Constant(3, -2.0), Vec::Constant(3, 1.0)};
  CHECK_THROWS_AS(make_grid(c, bad), Error);

  auto few = subsample(pts, 5);
  CHECK(few.size() <= 5);
  CHECK(few.front() == pts.front());
}

TEST_CASE("exterior derivative of 1-forms") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();

  SUBCASE("constant forms are closed") {
    OneForm lam(c, so3, [](const Vec&) {
      Mat v = Mat::Zero(3, 3);
      v(0, 1) = 2.0;
      v(2, 0) = -1.0;
      return v;
    });
    TwoFormValue d = exterior_derivative(lam).value(Vec::Zero(3));
    CHECK(d.max_abs() <= 1e-12);
  }

  SUBCASE("polynomial case: lambda = x1 dx2 (x) e") {
    OneForm lam(c, so3, [](const Vec& x) {
      Mat v = Mat::Zero(3, 3);
      v(1, 0) = x[0];  // coefficient x1 on dx2, target coordinate e_1
      return v;
    });
    Vec x(3);
    x << 0.3, -0.2, 0.1;
    TwoFormValue d = exterior_derivative(lam).value(x);
    CHECK((d.at(0, 1) - Vec::Unit(3, 0)).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((d.at(1, 0) + Vec::Unit(3, 0)).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(d.at(0, 2).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(d.at(1, 2).cwiseAbs().maxCoeff() <= 1e-9);
  }

  SUBCASE("finite differences match the closed-form oracle") {
    // lambda = sin(x1) dx2 (x) e1; d lambda_{12} = cos(x1) e1
    OneForm lam(c, so3,
                [](const Vec& x) {
                  Mat v = Mat::Zero(3, 3);
                  v(1, 0) = std::sin(x[0]);
                  return v;
                },
                nullptr, FdPolicy{5e-4});  // h = 1e-3 on extent 2
    Vec x = Vec::Zero(3);
    x[0] = 0.5;
    TwoFormValue d = exterior_derivative(lam).value(x);
    CHECK(std::abs(d.at(0, 1)[0] - std::cos(0.5)) <= 1e-9);
  }
}

TEST_CASE("boundary handling of the stencil") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();
  OneForm lam(c, so3, [](const Vec& x) {
    return Mat::Constant(3, 3, std::sin(x[0] + x[1]));
  });
  Vec edge = Vec::Zero(3);
  edge[0] = 1.0 - 1e-5;  // within 2h of the boundary
  CHECK_THROWS_AS(lam.derivative(edge, 0), Error);

  Vec outside = Vec::Constant(3, 1.5);
  CHECK_THROWS_AS(lam.value(outside), Error);

  // step underflow
  CHECK_THROWS_AS(OneForm(c, so3,
                          [](const Vec&) { return Mat::Zero(3, 3); },
                          nullptr, FdPolicy{1e-16})
                      .derivative(Vec::Zero(3), 0),
                  Error);
}

TEST_CASE("wedge bracket") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();
  std::mt19937_64 eng(21);

  OneForm alpha(c, so3, [](const Vec&) -> Mat { return Mat::Identity(3, 3); });

  SUBCASE("frame form satisfies (1/2)[alpha^alpha](d1,d2) = L3") {
    // independent evaluation through raw structure constants
    auto so3c = so3;
    Vec expected = Vec::Zero(3);
    for (int k = 0; k < 3; ++k) expected[k] = so3c->c(0, 1, k);
    TwoFormValue w = wedge_bracket(alpha, alpha).value(Vec::Zero(3));
    CHECK((0.5 * w.at(0, 1) - expected).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((expected - Vec::Unit(3, 2)).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("symmetric in its arguments") {
    Mat a = Mat::Random(3, 3), b = Mat::Random(3, 3);
    OneForm lam(c, so3, [a](const Vec& x) -> Mat { return std::sin(x[0]) * a; });
    OneForm mu(c, so3, [b](const Vec& x) -> Mat { return std::cos(x[1]) * b; });
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_interior(eng, c, 0.1);
      TwoFormValue lm = wedge_bracket(lam, mu).value(x);
      TwoFormValue ml = wedge_bracket(mu, lam).value(x);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK((lm.at(i, j) - ml.at(i, j)).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }

  SUBCASE("abelian targets give zero") {
    auto ab = abelian_algebra(3);
    OneForm lam(c, ab, [](const Vec& x) -> Mat {
      return Mat::Constant(3, 3, 1.0 + x[0]);
    });
    CHECK(wedge_bracket(lam, lam).value(Vec::Zero(3)).max_abs() == 0.0);
  }

  SUBCASE("algebra mismatch is an error") {
    OneForm mu(c, su2_algebra(),
               [](const Vec&) -> Mat { return Mat::Identity(3, 3); });
    CHECK_THROWS_AS(wedge_bracket(alpha, mu), Error);
  }

  SUBCASE("wedge of a form with itself doubles the pointwise bracket") {
    Mat a = Mat::Random(3, 3);
    OneForm lam(c, so3,
                [a](const Vec& x) -> Mat { return (1.0 + x[1] * x[1]) * a; });
    Vec x = random_interior(eng, c, 0.1);
    Mat v = lam.value(x);
    TwoFormValue w = wedge_bracket(lam, lam).value(x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec direct = so3->bracket(v.row(i), v.row(j));
        CHECK((w.at(i, j) - 2.0 * direct).cwiseAbs().maxCoeff() <= 1e-13);
      }
  }
}

TEST_CASE("form norms") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();

  TwoFormValue zero(3, 3);
  CHECK(form_norm(*so3, zero) == 0.0);

  TwoFormValue single(3, 3);
  single.set_pair(0, 1, Vec::Unit(3, 2));  // L3 on (1,2)
  CHECK(form_norm(*so3, single) == 1.0);

  TwoFormValue scaled = single;
  scaled *= -2.5;
  CHECK(form_norm(*so3, scaled) == doctest::Approx(2.5).epsilon(1e-14));

  OneForm lam(c, so3, [](const Vec&) -> Mat { return Mat::Identity(3, 3); });
  CHECK(form_norm(lam, Vec::Zero(3)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

  // missing inner product
  OneForm sl2r_form(c, sl2r_algebra(),
                    [](const Vec&) -> Mat { return Mat::Identity(3, 3); });
  CHECK_THROWS_AS(form_norm(sl2r_form, Vec::Zero(3)), Error);

  // degree-2 antisymmetry enforcement
  TwoFormValue bad(3, 3);
  CHECK_THROWS_AS(bad.set_pair(1, 1, Vec::Unit(3, 0)), Error);
}

TEST_CASE("d of d vanishes on smooth functions in finite-difference mode") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();
  ZeroForm f(c, so3, [](const Vec& x) {
    Vec v(3);
    v << std::sin(x[0] + 2.0 * x[1]), std::cos(x[2]) * x[0],
        std::exp(0.3 * x[1]);
    return v;
  });
  TwoForm dd = exterior_derivative(exterior_derivative(f));
  std::mt19937_64 eng(31);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = random_interior(eng, c, 0.25);
    CHECK(dd.value(x).max_abs() <= 1e-8);
  }
}

TEST_CASE("closed-form and finite-difference modes agree on scenario forms") {
  std::mt19937_64 eng(32);
  for (const auto& info : scenario_registry()) {
    LocalTriple t = make_scenario(info.name);
    REQUIRE(t.alpha.form().mode() == DerivMode::ClosedForm);
    for (const OneForm* f : {&t.alpha.form(), &t.connection.form()}) {
      for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_interior(eng, t.chart, 0.05 * t.chart.extent(0));
        for (int axis = 0; axis < t.chart.dim(); ++axis) {
          double dev =
              (f->derivative(x, axis) - f->derivative_fd(x, axis))
                  .cwiseAbs()
                  .maxCoeff();
          CAPTURE(info.name);
          CHECK(dev <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("grid CSV dump") {
  Chart c = unit_chart();
  auto so3 = so3_algebra();
  OneForm lam(
      c, so3, [](const Vec& x) -> Mat { return x[0] * Mat::Identity(3, 3); },
      [](const Vec&, int axis) -> Mat {
        return axis == 0 ? Mat::Identity(3, 3) : Mat::Zero(3, 3);
      });
  GridSpec spec{{2, 2, 2}, {}, {}};
  auto pts = make_grid(c, spec);

  std::ostringstream os1, os2;
  write_grid_csv(os1, lam, pts);
  write_grid_csv(os2, lam, pts);
  CHECK(os1.str() == os2.str());

  std::istringstream is(os1.str());
  std::string header;
  std::getline(is, header);
  CHECK(header.rfind("x1,x2,x3,", 0) == 0);
  int rows = 0;
  std::string line;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 8);

  std::ostringstream os3;
  write_grid_csv(os3, exterior_derivative(lam), pts);
  CHECK(os3.str().find("dx1^dx2") != std::string::npos);
}
