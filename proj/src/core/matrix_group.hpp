#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/lie_algebra.hpp"

namespace zentner {

// e^X by scaling and squaring with a Taylor core. Any square matrix.
CMat matrix_exp(const CMat& X);
Mat matrix_exp(const Mat& X);

// Principal logarithm near the identity: requires the spectral radius of
// X - I to be below 1 and throws otherwise.
CMat matrix_log(const CMat& X);

// Euclidean cross product and the R^3 ~ so(3) isomorphism u -> (v -> u x v).
Eigen::Vector3d cross(const Eigen::Vector3d& u, const Eigen::Vector3d& v);
Mat so3_of(const Eigen::Vector3d& u);
Eigen::Vector3d so3_coords(const Mat& w);  // inverse of so3_of (antisymmetric input)

// A matrix Lie group together with a concrete matrix realization of its
// Lie algebra basis. Construction checks that the basis matrices satisfy the
// linearized membership condition and that their commutators reproduce the
// abstract structure constants to 1e-12.
class MatrixGroup {
 public:
  using DefectFn = std::function<double(const CMat&)>;

  MatrixGroup(std::string name, int matrix_size, bool complex_entries,
              LieAlgebraPtr algebra, std::vector<CMat> basis,
              DefectFn group_defect, DefectFn algebra_defect,
              double membership_tol = 1e-9);

  const std::string& name() const { return name_; }
  int matrix_size() const { return size_; }
  bool complex_entries() const { return complex_; }
  const LieAlgebraPtr& algebra() const { return algebra_; }
  const std::vector<CMat>& basis() const { return basis_; }
  double membership_tol() const { return tol_; }

  double group_defect(const CMat& g) const { return group_defect_(g); }
  bool is_member(const CMat& g) const { return group_defect_(g) <= tol_; }
  void require_member(const CMat& g) const;

  CMat identity() const { return CMat::Identity(size_, size_); }
  CMat matrix_of(const Vec& coords) const;
  // Coordinates of X in the realized basis (real-linear least squares);
  // throws when X is not in the span within tolerance.
  Vec coords_of(const CMat& X) const;

  CMat exp_coords(const Vec& k) const;  // exp(sum k_a basis_a)
  Vec log_coords(const CMat& g) const;  // coords of matrix_log(g)

  // Ad_g X = g X g^{-1}, on coordinates. Checks membership of g.
  Vec Ad(const CMat& g, const Vec& x) const;
  // n x n real matrix of Ad_g on basis coordinates.
  Mat Ad_matrix(const CMat& g) const;

 private:
  std::string name_;
  int size_;
  bool complex_;
  LieAlgebraPtr algebra_;
  std::vector<CMat> basis_;
  DefectFn group_defect_, algebra_defect_;
  double tol_;
  Eigen::ColPivHouseholderQR<Mat> coords_solver_;
  Mat basis_stack_;  // real-vectorized basis, one column per generator
};

using MatrixGroupPtr = std::shared_ptr<const MatrixGroup>;

MatrixGroupPtr so3_group();   // 3x3 real, orthogonal, det 1
MatrixGroupPtr su2_group();   // 2x2 complex, unitary, det 1
MatrixGroupPtr sl2r_group();  // 2x2 real entries, det 1
// Complex group with the 2n-dimensional real algebra {e_a, i e_a} built on
// top of a real-form realization (SL(2,C) for the groups above).
MatrixGroupPtr complexified_group(const MatrixGroupPtr& h);

// The matrix of Ad_g on su(2) in the orthonormal basis e_k = -i sigma_k / 2;
// lands in SO(3), kernel {+I, -I}.
Mat su2_to_so3(const CMat& g);

// A real form H of a complex group G: the ambient algebra splits as
// h + i h. Provides the decomposition omega = theta - i alpha.
class RealFormDecomposition {
 public:
  RealFormDecomposition(MatrixGroupPtr ambient, MatrixGroupPtr form);

  const MatrixGroupPtr& ambient() const { return ambient_; }
  const MatrixGroupPtr& form() const { return form_; }
  int form_dim() const { return form_->algebra()->dim(); }

  // omega = theta - i alpha with theta, alpha in h; returns (theta, alpha)
  // as coordinates in the real-form basis.
  std::pair<Vec, Vec> split(const CMat& omega) const;
  std::pair<Vec, Vec> split_coords(const Vec& ambient_coords) const;
  // theta - i alpha as a matrix (right inverse of split).
  CMat combine(const Vec& theta, const Vec& alpha) const;

 private:
  MatrixGroupPtr ambient_, form_;
};

RealFormDecomposition su2_in_sl2c();
RealFormDecomposition sl2r_in_sl2c();

}  // namespace zentner
