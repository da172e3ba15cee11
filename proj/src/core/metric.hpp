#pragma once

#include <functional>

#include "core/chart.hpp"
#include "core/common.hpp"

namespace zentner {

// A Riemannian metric on a chart, with optional closed-form first
// derivatives. Used as the independent geometry oracle.
struct MetricChart {
  Chart chart;
  std::function<Mat(const Vec&)> g;
  std::function<Mat(const Vec&, int)> dg;  // optional: d/dx_axis of g
  int orientation = +1;
  double fd_base = 5e-4;  // stencil scale for metric derivatives

  Mat metric_at(const Vec& x) const;             // validates symmetry + SPD
  Mat metric_derivative(const Vec& x, int axis) const;
};

// Gamma^k_{ij} = (1/2) g^{kl} (d_i g_jl + d_j g_il - d_l g_ij);
// result indexed (k, i, j), symmetric in (i, j).
Tensor3 levi_civita_oracle(const MetricChart& mc, const Vec& x);

// R^l_{kij} (so that R(d_i, d_j) d_k = R^l_{kij} d_l) via finite differences
// of the Christoffel symbols.
Tensor4 riemann_oracle(const MetricChart& mc, const Vec& x);

// Sectional curvature K(u, v) = g(R(u,v)v, u) / (|u|^2 |v|^2 - g(u,v)^2).
double riemann_sectional_oracle(const MetricChart& mc, const Vec& x,
                                const Vec& u, const Vec& v);

// R^l_{kij} from a Christoffel field by the same finite-difference pass;
// shared by the metric oracle and the induced-connection cross-check.
Tensor4 riemann_from_christoffel(
    const std::function<Tensor3(const Vec&)>& gamma, const Chart& chart,
    const Vec& x, double fd_base);

}  // namespace zentner
