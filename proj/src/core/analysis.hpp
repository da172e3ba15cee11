#pragma once

#include "core/gauge.hpp"
#include "core/metric.hpp"

namespace zentner {

// Residuals of the integrability system
//   (1)  d_A alpha = 0
//   (2)  Omega_A - (1/2)[alpha ^ alpha] = 0
// evaluated on a grid. Per-point norms are the worst algebra norm of a
// residual component over pairs of the triple's evaluation frame, so the
// numbers are comparable across scenarios with different coordinate scalings.
struct ResidualPoint {
  Vec x;
  double r1 = 0.0;
  double r2 = 0.0;
};

struct ZentnerResiduals {
  std::vector<ResidualPoint> points;
  std::vector<TwoFormValue> r1_table, r2_table;  // aligned with points
  double max_r1 = 0.0, max_r2 = 0.0;

  bool integrable(double tol) const { return max_r1 <= tol && max_r2 <= tol; }
};

ZentnerResiduals zentner_residuals(const LocalTriple& t,
                                   const std::vector<Vec>& grid);

// The transported bracket [u, v]_alpha = alpha^{-1} [alpha(u), alpha(v)].
Vec bracket_alpha(const LocalTriple& t, const Vec& u, const Vec& v,
                  const Vec& x);

// Chart sample of the induced linear connection nabla^alpha_A:
//   nabla_{d_i} X = alpha^{-1}( d(alpha(X))(d_i) + [A(d_i), alpha(X)] ).
// gamma(k,i,j) holds Gamma^k_{ij} (i the direction); torsion(k,i,j) its
// antisymmetrization; curvature tensors are indexed (l,k,i,j) as in
// R(d_i, d_j) d_k = R^l_{kij} d_l.
struct InducedConnectionSample {
  Vec x;
  Tensor3 gamma;
  Tensor3 torsion;
  Tensor4 curvature_numeric;    // finite differences of Gamma
  Tensor4 curvature_algebraic;  // alpha^{-1}([Omega(u,v), alpha(w)])

  double max_torsion() const { return torsion.max_abs(); }
  double curvature_mismatch() const {
    return curvature_numeric.max_abs_diff(curvature_algebraic);
  }
};

InducedConnectionSample induced_connection(const LocalTriple& t, const Vec& x,
                                           double curvature_fd_base = 1e-3);

// Christoffel field of nabla^alpha_A (for oracle comparisons).
Tensor3 induced_christoffel(const LocalTriple& t, const Vec& x);

// The moduli-map data: orientation o_alpha = sign det(alpha) and metric
// g_alpha(u,v) = <alpha(u), alpha(v)>. Requires an inner product on the
// structure algebra; reports inadmissibility when det changes sign.
struct PsiSample {
  Vec x;
  Mat metric;
};

struct PsiResult {
  int orientation = 0;
  std::vector<PsiSample> samples;
};

PsiResult metric_orientation_psi(const LocalTriple& t,
                                 const std::vector<Vec>& grid);

// g_alpha as an evaluable metric (shares the triple's chart).
MetricChart recovered_metric(const LocalTriple& t);

// A point of the trivialized total space U x H in exponential fiber
// coordinates: the group element is exp(sum_a fiber_a e_a).
struct TotalSpacePoint {
  Vec base;
  Vec fiber;
};

// The almost complex structure J^alpha_A at y, as a 2n x 2n real matrix in
// (base, fiber) coordinates. J maps the horizontal subspace (kernel of the
// pulled-back connection form) onto the vertical subspace; J^2 = -I.
Mat acs_matrix(const LocalTriple& t, const TotalSpacePoint& y,
               double fiber_guard = 1.0);

// Coordinate Nijenhuis components
//   N^k_{ij} = J^l_i d_l J^k_j - J^l_j d_l J^k_i - J^k_l (d_i J^l_j - d_j J^l_i)
// by finite differences of the J field; antisymmetric in (i, j).
struct NijenhuisSample {
  TotalSpacePoint y;
  Tensor3 components;
  double max_abs = 0.0;
  double j_scale = 0.0;  // max |J entry| at y, for relative thresholds
};

NijenhuisSample nijenhuis(const LocalTriple& t, const TotalSpacePoint& y,
                          double fiber_guard = 1.0, double fd_step = 1e-3);

}  // namespace zentner
