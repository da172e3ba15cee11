#pragma once

#include <functional>
#include <iosfwd>
#include <memory>

#include "core/chart.hpp"
#include "core/common.hpp"
#include "core/lie_algebra.hpp"

namespace zentner {

enum class DerivMode { ClosedForm, FiniteDifference };

// 4th-order central finite differences. The step on each axis is
// base_step * extent(axis); stencil points within 2h of the chart boundary
// are rejected rather than evaluated one-sided.
struct FdPolicy {
  double base_step = 1e-4;
  double step(const Chart& chart, int axis) const {
    double h = base_step * chart.extent(axis);
    require(h > 1e-13, ErrorCode::Evaluation,
            "finite-difference step underflow on axis " + std::to_string(axis));
    return h;
  }
};

// Value of an algebra-valued 2-form at a point: an antisymmetric m x m table
// of coordinate vectors in the target algebra.
class TwoFormValue {
 public:
  TwoFormValue() : m_(0), n_(0) {}
  TwoFormValue(int m, int n)
      : m_(m), n_(n), table_(static_cast<std::size_t>(m) * m, Vec::Zero(n)) {}

  int chart_dim() const { return m_; }
  int algebra_dim() const { return n_; }

  const Vec& at(int i, int j) const { return table_[i * m_ + j]; }
  // Sets component (i, j) and forces (j, i) = -value.
  void set_pair(int i, int j, const Vec& value);

  // Evaluation on tangent coordinate vectors.
  Vec contract(const Vec& u, const Vec& v) const;

  TwoFormValue& operator+=(const TwoFormValue& other);
  TwoFormValue& operator-=(const TwoFormValue& other);
  TwoFormValue& operator*=(double scale);
  double max_abs() const;

 private:
  int m_, n_;
  std::vector<Vec> table_;
};

// Degree-0 algebra-valued form: a function chart -> algebra coordinates.
class ZeroForm {
 public:
  using ValueFn = std::function<Vec(const Vec&)>;
  using DerivFn = std::function<Vec(const Vec&, int)>;

  ZeroForm(Chart chart, LieAlgebraPtr algebra, ValueFn value,
           DerivFn closed_form_derivative = nullptr, FdPolicy fd = {});

  const Chart& chart() const { return chart_; }
  const LieAlgebraPtr& algebra() const { return algebra_; }
  DerivMode mode() const {
    return dvalue_ ? DerivMode::ClosedForm : DerivMode::FiniteDifference;
  }
  const FdPolicy& fd() const { return fd_; }

  Vec value(const Vec& x) const;
  Vec derivative(const Vec& x, int axis) const;
  Vec derivative_fd(const Vec& x, int axis) const;

 private:
  Chart chart_;
  LieAlgebraPtr algebra_;
  ValueFn value_;
  DerivFn dvalue_;
  FdPolicy fd_;
};

// Degree-1 algebra-valued form. The value at x is an m x n matrix whose row i
// holds the algebra coordinates of lambda(d/dx_i).
class OneForm {
 public:
  using ValueFn = std::function<Mat(const Vec&)>;
  using DerivFn = std::function<Mat(const Vec&, int)>;

  OneForm(Chart chart, LieAlgebraPtr algebra, ValueFn value,
          DerivFn closed_form_derivative = nullptr, FdPolicy fd = {});

  const Chart& chart() const { return chart_; }
  const LieAlgebraPtr& algebra() const { return algebra_; }
  DerivMode mode() const {
    return dvalue_ ? DerivMode::ClosedForm : DerivMode::FiniteDifference;
  }
  const FdPolicy& fd() const { return fd_; }

  Mat value(const Vec& x) const;
  // d/dx_axis of the whole value matrix.
  Mat derivative(const Vec& x, int axis) const;
  Mat derivative_fd(const Vec& x, int axis) const;
  // Contraction with a tangent coordinate vector.
  Vec apply(const Vec& x, const Vec& v) const;

  // Drops any closed-form derivative so evaluation goes through the stencil.
  OneForm forced_finite_difference() const;

  OneForm operator+(const OneForm& other) const;
  OneForm operator-(const OneForm& other) const;
  OneForm scaled(double factor) const;

 private:
  Chart chart_;
  LieAlgebraPtr algebra_;
  ValueFn value_;
  DerivFn dvalue_;
  FdPolicy fd_;
};

// Degree-2 algebra-valued form (top degree used here; no derivatives).
class TwoForm {
 public:
  using ValueFn = std::function<TwoFormValue(const Vec&)>;

  TwoForm(Chart chart, LieAlgebraPtr algebra, ValueFn value);

  const Chart& chart() const { return chart_; }
  const LieAlgebraPtr& algebra() const { return algebra_; }
  TwoFormValue value(const Vec& x) const;

  TwoForm operator+(const TwoForm& other) const;
  TwoForm operator-(const TwoForm& other) const;
  TwoForm scaled(double factor) const;

 private:
  Chart chart_;
  LieAlgebraPtr algebra_;
  ValueFn value_;
};

// (d lambda)_i = d_i lambda per algebra coordinate.
OneForm exterior_derivative(const ZeroForm& f);
// (d lambda)_{ij} = d_i lambda_j - d_j lambda_i.
TwoForm exterior_derivative(const OneForm& lambda);

// [lambda ^ mu](u, v) = [lambda(u), mu(v)] - [lambda(v), mu(u)].
// Symmetric in (lambda, mu); (1/2)[alpha ^ alpha](u,v) = [alpha(u), alpha(v)].
TwoForm wedge_bracket(const OneForm& lambda, const OneForm& mu);

// Frobenius-style norms: sqrt of the sum of <component, component> over
// index tuples (i for degree 1, i<j for degree 2). Requires an inner product
// on the target algebra.
double form_norm(const OneForm& omega, const Vec& x);
double form_norm(const TwoForm& omega, const Vec& x);
double form_norm(const LieAlgebra& algebra, const TwoFormValue& value);

// One row per grid point: coordinates, then per-component values.
void write_grid_csv(std::ostream& os, const OneForm& omega,
                    const std::vector<Vec>& points);
void write_grid_csv(std::ostream& os, const TwoForm& omega,
                    const std::vector<Vec>& points);

}  // namespace zentner
