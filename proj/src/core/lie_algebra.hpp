#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/common.hpp"

namespace zentner {

// One nonzero structure constant: [e_i, e_j] += value * e_k.
struct StructureTriple {
  int i, j, k;
  double value;
};

// A finite-dimensional real Lie algebra given by a basis and structure
// constants, optionally with an Ad-invariant inner product on the basis.
// Construction validates antisymmetry, the Jacobi identity, and (when an
// inner product is supplied) positive definiteness and Ad-invariance.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> labels,
             const std::vector<StructureTriple>& constants,
             std::optional<Mat> inner_product = std::nullopt);

  // { "dim", "labels", "c": [[i,j,k,value],...], "inner_product": matrix }
  static LieAlgebra from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // [e_i, e_j] = sum_k c(i,j,k) e_k
  double c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad_x = [x, .] on basis coordinates.
  Mat ad(const Vec& x) const;

  bool has_inner_product() const { return inner_.has_value(); }
  const Mat& inner_product() const;
  double inner(const Vec& x, const Vec& y) const;
  double norm(const Vec& x) const;
  // Inner-product norm when available, plain Euclidean coordinate norm
  // otherwise. Residual reporting for algebras of non-compact groups (no
  // invariant inner product) uses this.
  double norm_or_euclidean(const Vec& x) const;

  // Diagnostics: worst-case defects over all basis tuples.
  double antisymmetry_defect() const;
  double jacobi_defect() const;
  double ad_invariance_defect() const;  // 0 when no inner product

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  void validate() const;

  std::string name_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<double> c_;
  std::optional<Mat> inner_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

// so(3) with basis L_k = (v -> e_k x v) and the inner product transported
// from R^3 (<L_i, L_j> = delta_ij).
LieAlgebraPtr so3_algebra();
// su(2) with basis e_k = -i sigma_k / 2, inner product delta_ij (the scaling
// that makes Ad: SU(2) -> SO(3) an isometry).
LieAlgebraPtr su2_algebra();
// sl(2,R) with basis h = diag(1,-1), e = E_12, f = E_21. No invariant inner
// product exists (non-compact), so none is attached.
LieAlgebraPtr sl2r_algebra();
// R^n with the zero bracket and the standard inner product.
LieAlgebraPtr abelian_algebra(int n);
// The complexification of h viewed as a real algebra of dimension 2n with
// basis {e_1..e_n, i e_1..i e_n}.
LieAlgebraPtr complexified_algebra(const LieAlgebraPtr& h);

}  // namespace zentner
