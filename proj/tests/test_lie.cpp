#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "core/lie_algebra.hpp"
#include "core/matrix_group.hpp"
#include "oracles.hpp"

using namespace zentner;

namespace {

Vec random_vec(std::mt19937_64& eng, int n, double scale = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform_in(eng, -scale, scale);
  return v;
}

CMat random_cmat(std::mt19937_64& eng, int n, double scale) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = complexd(uniform_in(eng, -scale, scale),
                         uniform_in(eng, -scale, scale));
  double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  if (norm > scale) m *= scale / norm;
  return m;
}

}  // namespace

TEST_CASE("shipped algebras satisfy the structure-constant invariants") {
  for (const auto& alg : {so3_algebra(), su2_algebra(), sl2r_algebra(),
                          complexified_algebra(su2_algebra()),
                          complexified_algebra(sl2r_algebra())}) {
    CAPTURE(alg->name());
    CHECK(alg->antisymmetry_defect() <= 1e-12);
    CHECK(alg->jacobi_defect() <= 1e-12);
    CHECK(alg->ad_invariance_defect() <= 1e-12);
  }
}

TEST_CASE("invalid specs are rejected") {
  // violates antisymmetry
  CHECK_THROWS_AS(LieAlgebra("bad", {"a", "b"}, {{0, 1, 0, 1.0}}, std::nullopt),
                  Error);
  // violates Jacobi: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=-e2
  CHECK_THROWS_AS(
      LieAlgebra("bad-jacobi", {"a", "b", "c"},
                 {{0, 1, 2, 1.0},
                  {1, 0, 2, -1.0},
                  {1, 2, 0, 1.0},
                  {2, 1, 0, -1.0},
                  {2, 0, 1, -1.0},
                  {0, 2, 1, 1.0}},
                 std::nullopt),
      Error);
  // non-invariant inner product on so(3)
  Mat g = Mat::Identity(3, 3);
  g(0, 0) = 4.0;
  CHECK_THROWS_AS(LieAlgebra("so3-skewed", {"a", "b", "c"},
                             {{0, 1, 2, 1.0},
                              {1, 0, 2, -1.0},
                              {1, 2, 0, 1.0},
                              {2, 1, 0, -1.0},
                              {2, 0, 1, 1.0},
                              {0, 2, 1, -1.0}},
                             g),
                  Error);
}

TEST_CASE("bracket on so(3) is the cross product") {
  auto so3 = so3_algebra();
  Vec l1 = Vec::Unit(3, 0), l2 = Vec::Unit(3, 1);
  CHECK((so3->bracket(l1, l2) - Vec::Unit(3, 2)).norm() == 0.0);

  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = random_vec(eng, 3);
    CHECK(so3->bracket(x, x).norm() == 0.0);
  }

  Vec bad(2);
  bad << 1, 2;
  CHECK_THROWS_AS(so3->bracket(bad, l1), Error);
}

TEST_CASE("su(2) bracket matches the Pauli commutator oracle") {
  auto su2 = su2_algebra();
  auto basis = oracles::su2_basis();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      oracles::CMat comm = basis[i] * basis[j] - basis[j] * basis[i];
      Eigen::Vector3d expected = oracles::su2_coords(comm);
      Vec got = su2->bracket(Vec::Unit(3, i), Vec::Unit(3, j));
      CHECK((got - Vec(expected)).cwiseAbs().maxCoeff() <= 1e-14);
    }
  // in particular [e1, e2] = e3
  CHECK((su2->bracket(Vec::Unit(3, 0), Vec::Unit(3, 1)) - Vec::Unit(3, 2))
            .norm() <= 1e-15);
}

TEST_CASE("algebra JSON round trip and error paths") {
  auto so3 = so3_algebra();
  nlohmann::json doc = so3->to_json();
  CHECK(doc.contains("dim"));
  CHECK(doc.contains("labels"));
  CHECK(doc.contains("c"));
  LieAlgebra back = LieAlgebra::from_json(doc);
  CHECK(back.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(back.c(i, j, k) == so3->c(i, j, k));
  CHECK(back.has_inner_product());

  nlohmann::json literal = {
      {"dim", 2},
      {"labels", {"a", "b"}},
      {"c", nlohmann::json::array()},
      {"inner_product", {{1.0, 0.0}, {0.0, 2.0}}}};
  LieAlgebra ab = LieAlgebra::from_json(literal);
  CHECK(ab.dim() == 2);
  CHECK(ab.inner(Vec::Unit(2, 1), Vec::Unit(2, 1)) == 2.0);

  CHECK_THROWS_AS(LieAlgebra::from_json(nlohmann::json{{"dim", 3}}), Error);
  nlohmann::json ragged = literal;
  ragged["c"] = {{0, 1, 0}};  // missing value entry
  CHECK_THROWS_AS(LieAlgebra::from_json(ragged), Error);
}

TEST_CASE("matrix_exp basics and series oracle") {
  CHECK((matrix_exp(CMat::Zero(3, 3)) - CMat::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  double t = 0.7;
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = t;
  d(1, 1) = -t;
  CMat e = matrix_exp(d);
  CHECK(std::abs(e(0, 0) - std::exp(t)) <= 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-t)) <= 1e-14);
  CHECK(std::abs(e(0, 1)) == 0.0);

  std::mt19937_64 eng(5);
  for (int trial = 0; trial < 25; ++trial) {
    CMat x = random_cmat(eng, 3, 1.0);
    CMat expected = oracles::series_exp(x);
    double scale = expected.cwiseAbs().maxCoeff();
    CHECK((matrix_exp(x) - expected).cwiseAbs().maxCoeff() <= 1e-12 * scale);
  }

  CMat rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(matrix_exp(rect), Error);
}

TEST_CASE("matrix_exp inverse property") {
  std::mt19937_64 eng(6);
  for (int trial = 0; trial < 20; ++trial) {
    CMat x = random_cmat(eng, 3, 2.0);
    CMat prod = matrix_exp(x) * matrix_exp(CMat(-x));
    CHECK((prod - CMat::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("matrix_log near the identity, guarded away from it") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CMat x = random_cmat(eng, 2, 0.4);
    CMat g = matrix_exp(x);
    CMat l = matrix_log(g);
    CHECK((matrix_exp(l) - g).cwiseAbs().maxCoeff() <= 1e-12);
  }
  CMat far = CMat::Zero(2, 2);
  far(0, 0) = 3.0;
  far(1, 1) = 1.0 / 3.0;
  CHECK_THROWS_AS(matrix_log(far), Error);
}

TEST_CASE("adjoint action") {
  auto su2 = su2_group();
  std::mt19937_64 eng(8);

  SUBCASE("identity acts trivially") {
    Vec x = random_vec(eng, 3);
    CHECK((su2->Ad(su2->identity(), x) - x).cwiseAbs().maxCoeff() <= 1e-14);
  }

  SUBCASE("Ad is a bracket homomorphism") {
    for (int trial = 0; trial < 10; ++trial) {
      CMat g = su2->exp_coords(random_vec(eng, 3, 1.2));
      Vec x = random_vec(eng, 3), y = random_vec(eng, 3);
      Vec lhs = su2->Ad(g, su2->algebra()->bracket(x, y));
      Vec rhs = su2->algebra()->bracket(su2->Ad(g, x), su2->Ad(g, y));
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }

  SUBCASE("quarter turn about e3 sends e1 to e2 (conjugation oracle)") {
    auto basis = oracles::su2_basis();
    CMat g = oracles::series_exp(oracles::CMat(M_PI / 2.0 * basis[2]));
    CMat conj = g * basis[0] * g.inverse();
    Eigen::Vector3d expected = oracles::su2_coords(conj);
    CHECK((expected - Eigen::Vector3d::Unit(1)).cwiseAbs().maxCoeff() <= 1e-12);
    Vec got = su2->Ad(g, Vec::Unit(3, 0));
    CHECK((got - Vec::Unit(3, 1)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("membership is enforced") {
    CMat not_unitary = 2.0 * su2->identity();
    CHECK_THROWS_AS(su2->Ad(not_unitary, Vec::Unit(3, 0)), Error);
  }
}

TEST_CASE("matrix group construction validates the realization") {
  // so(3) spec with an sl(2,R)-style realization cannot reproduce the
  // cross-product structure constants
  Mat h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  std::vector<CMat> basis = {h.cast<complexd>(), e.cast<complexd>(),
                             f.cast<complexd>()};
  auto defect = [](const CMat&) { return 0.0; };
  CHECK_THROWS_AS(
      MatrixGroup("broken", 2, false, so3_algebra(), basis, defect, defect),
      Error);
}

TEST_CASE("real form split") {
  RealFormDecomposition rf = su2_in_sl2c();
  auto su2m = su2_group();
  const complexd i(0.0, 1.0);

  SUBCASE("elements of h split as (theta, 0)") {
    CMat e1 = su2m->basis()[0];
    auto [theta, alpha] = rf.split(e1);
    CHECK((theta - Vec::Unit(3, 0)).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(alpha.cwiseAbs().maxCoeff() <= 1e-13);
  }

  SUBCASE("i times h splits as (0, -e)") {
    CMat ie2 = i * su2m->basis()[1];
    auto [theta, alpha] = rf.split(ie2);
    CHECK(theta.cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((alpha + Vec::Unit(3, 1)).cwiseAbs().maxCoeff() <= 1e-13);
  }

  SUBCASE("hermitian traceless splits as (0, iH), iH anti-hermitian") {
    CMat hmat(2, 2);
    hmat << 1.0, complexd(0.5, -0.25), complexd(0.5, 0.25), -1.0;
    auto [theta, alpha] = rf.split(hmat);
    CHECK(theta.cwiseAbs().maxCoeff() <= 1e-13);
    CMat alpha_mat = su2m->matrix_of(alpha);
    CHECK((alpha_mat - i * hmat).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((alpha_mat + alpha_mat.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
  }

  SUBCASE("split is a left inverse of combine") {
    std::mt19937_64 eng(9);
    for (const auto& dec : {su2_in_sl2c(), sl2r_in_sl2c()}) {
      for (int trial = 0; trial < 10; ++trial) {
        Vec theta = random_vec(eng, 3), alpha = random_vec(eng, 3);
        auto [t2, a2] = dec.split(dec.combine(theta, alpha));
        CHECK((t2 - theta).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((a2 - alpha).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("cross product and the so(3) isomorphism") {
  Eigen::Vector3d e1 = Eigen::Vector3d::Unit(0), e2 = Eigen::Vector3d::Unit(1);
  CHECK((cross(e1, e2) - Eigen::Vector3d::Unit(2)).norm() == 0.0);

  std::mt19937_64 eng(10);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector3d u, v;
    for (int a = 0; a < 3; ++a) {
      u[a] = uniform_in(eng, -2.0, 2.0);
      v[a] = uniform_in(eng, -2.0, 2.0);
    }
    Mat comm = so3_of(u) * so3_of(v) - so3_of(v) * so3_of(u);
    CHECK((comm - so3_of(cross(u, v))).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((so3_of(u) * u).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((so3_coords(so3_of(u)) - u).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("double cover SU(2) -> SO(3)") {
  auto su2 = su2_group();
  auto so3 = so3_group();
  const CMat id = su2->identity();

  CHECK((su2_to_so3(id) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((su2_to_so3(CMat(-id)) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() <=
        1e-14);

  SUBCASE("one-parameter subgroup about e3 maps to z-rotations") {
    double t = 0.3;
    CMat g = su2->exp_coords(t * Vec::Unit(3, 2));
    Mat r = su2_to_so3(g);
    CHECK((r - oracles::rotation_z(t)).cwiseAbs().maxCoeff() <= 1e-12);
    // Ad-conjugation oracle: columns are coordinates of g e_b g^{-1}
    auto basis = oracles::su2_basis();
    for (int b = 0; b < 3; ++b) {
      Eigen::Vector3d col = oracles::su2_coords(g * basis[b] * g.inverse());
      CHECK((r.col(b) - Vec(col)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("homomorphism on random pairs, image in SO(3)") {
    std::mt19937_64 eng(12);
    for (int trial = 0; trial < 50; ++trial) {
      CMat g = su2->exp_coords(random_vec(eng, 3, 1.5));
      CMat h = su2->exp_coords(random_vec(eng, 3, 1.5));
      Mat lhs = su2_to_so3(CMat(g * h));
      Mat rhs = su2_to_so3(g) * su2_to_so3(h);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(so3->is_member(lhs.cast<complexd>()));
    }
  }

  SUBCASE("differential maps e_k to so3_of(e_k)") {
    double h = 1e-6;
    for (int k = 0; k < 3; ++k) {
      Mat dr = (su2_to_so3(su2->exp_coords(h * Vec::Unit(3, k))) -
                su2_to_so3(su2->exp_coords(-h * Vec::Unit(3, k)))) /
               (2.0 * h);
      CHECK((dr - so3_of(Eigen::Vector3d::Unit(k))).cwiseAbs().maxCoeff() <=
            1e-9);
    }
  }

  SUBCASE("membership failure") {
    CMat bad(2, 2);
    bad << 1, 1, 0, 1;
    CHECK_THROWS_AS(su2_to_so3(bad), Error);
  }
}
