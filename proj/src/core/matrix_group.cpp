#include "core/matrix_group.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace zentner {

namespace {

template <typename MatT>
MatT exp_impl(const MatT& X) {
  require(X.rows() == X.cols(), ErrorCode::DimensionMismatch,
          "matrix_exp needs a square matrix");
  const int n = static_cast<int>(X.rows());
  double norm = X.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  MatT A = X / std::pow(2.0, squarings);

  MatT term = MatT::Identity(n, n);
  MatT sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * A) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace

CMat matrix_exp(const CMat& X) { return exp_impl<CMat>(X); }
Mat matrix_exp(const Mat& X) { return exp_impl<Mat>(X); }

CMat matrix_log(const CMat& X) {
  require(X.rows() == X.cols(), ErrorCode::DimensionMismatch,
          "matrix_log needs a square matrix");
  const int n = static_cast<int>(X.rows());
  CMat E = X - CMat::Identity(n, n);
  Eigen::ComplexEigenSolver<CMat> eig(E, /*computeEigenvectors=*/false);
  double rho = eig.eigenvalues().cwiseAbs().maxCoeff();
  require(rho < 1.0, ErrorCode::InvalidArgument,
          "matrix_log restricted to spectral radius of X - I below 1 (got " +
              std::to_string(rho) + ")");
  // log(I + E) = sum (-1)^{k+1} E^k / k
  CMat power = E;
  CMat sum = CMat::Zero(n, n);
  double scale = std::max(1.0, E.cwiseAbs().maxCoeff());
  for (int k = 1; k <= 512; ++k) {
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += (sign / k) * power;
    if (power.cwiseAbs().maxCoeff() / k < 1e-17 * scale) return sum;
    power = power * E;
  }
  fail(ErrorCode::Evaluation, "matrix_log series did not converge");
}

Eigen::Vector3d cross(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  return u.cross(v);
}

Mat so3_of(const Eigen::Vector3d& u) {
  Mat w = Mat::Zero(3, 3);
  w(0, 1) = -u[2];
  w(1, 0) = u[2];
  w(0, 2) = u[1];
  w(2, 0) = -u[1];
  w(1, 2) = -u[0];
  w(2, 1) = u[0];
  return w;
}

Eigen::Vector3d so3_coords(const Mat& w) {
  require(w.rows() == 3 && w.cols() == 3, ErrorCode::DimensionMismatch,
          "so3_coords needs a 3x3 matrix");
  require((w + w.transpose()).cwiseAbs().maxCoeff() <= 1e-9,
          ErrorCode::InvalidArgument, "so3_coords needs an antisymmetric matrix");
  return {w(2, 1), w(0, 2), w(1, 0)};
}

MatrixGroup::MatrixGroup(std::string name, int matrix_size, bool complex_entries,
                         LieAlgebraPtr algebra, std::vector<CMat> basis,
                         DefectFn group_defect, DefectFn algebra_defect,
                         double membership_tol)
    : name_(std::move(name)),
      size_(matrix_size),
      complex_(complex_entries),
      algebra_(std::move(algebra)),
      basis_(std::move(basis)),
      group_defect_(std::move(group_defect)),
      algebra_defect_(std::move(algebra_defect)),
      tol_(membership_tol) {
  const int n = algebra_->dim();
  require(static_cast<int>(basis_.size()) == n, ErrorCode::DimensionMismatch,
          "realized basis size must match algebra dimension");
  for (const auto& b : basis_) {
    require(b.rows() == size_ && b.cols() == size_, ErrorCode::DimensionMismatch,
            "basis matrix size mismatch in group " + name_);
    require(algebra_defect_(b) <= 1e-12, ErrorCode::InvalidArgument,
            "basis matrix violates the linearized membership condition of " +
                name_);
  }

  basis_stack_.resize(2 * size_ * size_, n);
  for (int a = 0; a < n; ++a) {
    int r = 0;
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) {
        basis_stack_(r++, a) = basis_[a](i, j).real();
        basis_stack_(r++, a) = basis_[a](i, j).imag();
      }
  }
  coords_solver_ = Eigen::ColPivHouseholderQR<Mat>(basis_stack_);
  require(coords_solver_.rank() == n, ErrorCode::InvalidArgument,
          "realized basis of " + name_ + " is linearly dependent over R");

  // commutators must reproduce the abstract structure constants
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMat comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      CMat expected = CMat::Zero(size_, size_);
      for (int k = 0; k < n; ++k) expected += algebra_->c(i, j, k) * basis_[k];
      require((comm - expected).cwiseAbs().maxCoeff() <= 1e-12,
              ErrorCode::InvalidArgument,
              "matrix commutators of " + name_ +
                  " do not reproduce the structure constants");
    }
}

void MatrixGroup::require_member(const CMat& g) const {
  double d = group_defect_(g);
  require(d <= tol_, ErrorCode::Membership,
          "matrix fails the membership test of " + name_ + " (defect " +
              std::to_string(d) + ")");
}

CMat MatrixGroup::matrix_of(const Vec& coords) const {
  require(coords.size() == algebra_->dim(), ErrorCode::DimensionMismatch,
          "coordinate vector size mismatch for " + name_);
  CMat out = CMat::Zero(size_, size_);
  for (int a = 0; a < coords.size(); ++a) out += coords[a] * basis_[a];
  return out;
}

Vec MatrixGroup::coords_of(const CMat& X) const {
  require(X.rows() == size_ && X.cols() == size_, ErrorCode::DimensionMismatch,
          "matrix size mismatch for " + name_);
  Vec rhs(2 * size_ * size_);
  int r = 0;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      rhs[r++] = X(i, j).real();
      rhs[r++] = X(i, j).imag();
    }
  Vec coords = coords_solver_.solve(rhs);
  double resid = (basis_stack_ * coords - rhs).cwiseAbs().maxCoeff();
  double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
  require(resid <= 1e-9 * scale, ErrorCode::InvalidArgument,
          "matrix is not in the realized algebra of " + name_ + " (residual " +
              std::to_string(resid) + ")");
  return coords;
}

CMat MatrixGroup::exp_coords(const Vec& k) const {
  return matrix_exp(matrix_of(k));
}

Vec MatrixGroup::log_coords(const CMat& g) const {
  return coords_of(matrix_log(g));
}

Vec MatrixGroup::Ad(const CMat& g, const Vec& x) const {
  require_member(g);
  CMat X = matrix_of(x);
  return coords_of(g * X * g.inverse());
}

Mat MatrixGroup::Ad_matrix(const CMat& g) const {
  require_member(g);
  const int n = algebra_->dim();
  CMat ginv = g.inverse();
  Mat out(n, n);
  for (int a = 0; a < n; ++a)
    out.col(a) = coords_of(g * basis_[a] * ginv);
  return out;
}

namespace {

double unitary_det1_defect(const CMat& g) {
  const int n = static_cast<int>(g.rows());
  double d = (g.adjoint() * g - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
  return std::max(d, std::abs(g.determinant() - complexd(1.0, 0.0)));
}

double real_part_defect(const CMat& g) {
  return g.imag().cwiseAbs().maxCoeff();
}

CMat embed(const Mat& m) { return m.cast<complexd>(); }

}  // namespace

MatrixGroupPtr so3_group() {
  static const MatrixGroupPtr group = [] {
    std::vector<CMat> basis;
    for (int k = 0; k < 3; ++k)
      basis.push_back(embed(so3_of(Eigen::Vector3d::Unit(k))));
    auto group_defect = [](const CMat& g) {
      double d = real_part_defect(g);
      Mat r = g.real();
      d = std::max(d, (r.transpose() * r - Mat::Identity(3, 3)).cwiseAbs().maxCoeff());
      return std::max(d, std::abs(r.determinant() - 1.0));
    };
    auto algebra_defect = [](const CMat& x) {
      double d = real_part_defect(x);
      return std::max(d, (x + x.transpose()).cwiseAbs().maxCoeff());
    };
    return std::make_shared<MatrixGroup>("SO(3)", 3, false, so3_algebra(),
                                         basis, group_defect, algebra_defect);
  }();
  return group;
}

MatrixGroupPtr su2_group() {
  static const MatrixGroupPtr group = [] {
    const complexd i(0.0, 1.0);
    CMat s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0, 1, 1, 0;
    s2 << 0, -i, i, 0;
    s3 << 1, 0, 0, -1;
    std::vector<CMat> basis = {-i / 2.0 * s1, -i / 2.0 * s2, -i / 2.0 * s3};
    auto algebra_defect = [](const CMat& x) {
      double d = (x + x.adjoint()).cwiseAbs().maxCoeff();  // anti-hermitian
      return std::max(d, std::abs(x.trace()));
    };
    return std::make_shared<MatrixGroup>("SU(2)", 2, true, su2_algebra(), basis,
                                         unitary_det1_defect, algebra_defect);
  }();
  return group;
}

MatrixGroupPtr sl2r_group() {
  static const MatrixGroupPtr group = [] {
    Mat h(2, 2), e(2, 2), f(2, 2);
    h << 1, 0, 0, -1;
    e << 0, 1, 0, 0;
    f << 0, 0, 1, 0;
    std::vector<CMat> basis = {embed(h), embed(e), embed(f)};
    auto group_defect = [](const CMat& g) {
      double d = real_part_defect(g);
      return std::max(d, std::abs(g.determinant() - complexd(1.0, 0.0)));
    };
    auto algebra_defect = [](const CMat& x) {
      double d = real_part_defect(x);
      return std::max(d, std::abs(x.trace()));
    };
    return std::make_shared<MatrixGroup>("SL(2,R)", 2, false, sl2r_algebra(),
                                         basis, group_defect, algebra_defect);
  }();
  return group;
}

MatrixGroupPtr complexified_group(const MatrixGroupPtr& h) {
  const complexd i(0.0, 1.0);
  std::vector<CMat> basis = h->basis();
  for (const auto& b : h->basis()) basis.push_back(i * b);
  auto group_defect = [](const CMat& g) {
    return std::abs(g.determinant() - complexd(1.0, 0.0));
  };
  auto algebra_defect = [](const CMat& x) { return std::abs(x.trace()); };
  return std::make_shared<MatrixGroup>(
      h->name() + " complexified", h->matrix_size(), true,
      complexified_algebra(h->algebra()), basis, group_defect, algebra_defect);
}

Mat su2_to_so3(const CMat& g) {
  auto su2 = su2_group();
  su2->require_member(g);
  return su2->Ad_matrix(g);
}

RealFormDecomposition::RealFormDecomposition(MatrixGroupPtr ambient,
                                             MatrixGroupPtr form)
    : ambient_(std::move(ambient)), form_(std::move(form)) {
  const int n = form_->algebra()->dim();
  require(ambient_->algebra()->dim() == 2 * n, ErrorCode::DimensionMismatch,
          "ambient algebra must have twice the real-form dimension");
  const complexd i(0.0, 1.0);
  for (int a = 0; a < n; ++a) {
    require((ambient_->basis()[a] - form_->basis()[a]).cwiseAbs().maxCoeff() <=
                1e-14,
            ErrorCode::InvalidArgument,
            "ambient basis must start with the real-form basis");
    require((ambient_->basis()[n + a] - i * form_->basis()[a])
                    .cwiseAbs()
                    .maxCoeff() <= 1e-14,
            ErrorCode::InvalidArgument,
            "ambient basis must continue with i times the real-form basis");
  }
}

std::pair<Vec, Vec> RealFormDecomposition::split(const CMat& omega) const {
  return split_coords(ambient_->coords_of(omega));
}

std::pair<Vec, Vec> RealFormDecomposition::split_coords(
    const Vec& ambient_coords) const {
  const int n = form_dim();
  require(ambient_coords.size() == 2 * n, ErrorCode::DimensionMismatch,
          "ambient coordinate vector must have dimension " +
              std::to_string(2 * n));
  // omega = theta + i a with theta, a in h; omega = theta - i alpha
  Vec theta = ambient_coords.head(n);
  Vec alpha = -ambient_coords.tail(n);
  return {theta, alpha};
}

CMat RealFormDecomposition::combine(const Vec& theta, const Vec& alpha) const {
  const complexd i(0.0, 1.0);
  return form_->matrix_of(theta) - i * form_->matrix_of(alpha);
}

RealFormDecomposition su2_in_sl2c() {
  static const auto ambient = complexified_group(su2_group());
  return RealFormDecomposition(ambient, su2_group());
}

RealFormDecomposition sl2r_in_sl2c() {
  static const auto ambient = complexified_group(sl2r_group());
  return RealFormDecomposition(ambient, sl2r_group());
}

}  // namespace zentner
