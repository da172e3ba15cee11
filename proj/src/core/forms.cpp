#include "core/forms.hpp"

#include <cmath>
#include <ostream>

namespace zentner {

namespace {

// Central 4th-order stencil: f'(x) ~ (-f(x+2h) + 8 f(x+h) - 8 f(x-h) + f(x-2h)) / 12h
// Callers check the 2h boundary margin.
template <typename T, typename F>
T central_derivative(const F& eval, const Vec& x, int axis, double h) {
  Vec xp = x, xm = x, xpp = x, xmm = x;
  xp[axis] += h;
  xm[axis] -= h;
  xpp[axis] += 2.0 * h;
  xmm[axis] -= 2.0 * h;
  T result = (-eval(xpp) + 8.0 * eval(xp) - 8.0 * eval(xm) + eval(xmm));
  return result / (12.0 * h);
}

}  // namespace

void TwoFormValue::set_pair(int i, int j, const Vec& value) {
  require(i >= 0 && i < m_ && j >= 0 && j < m_, ErrorCode::DimensionMismatch,
          "2-form component index out of range");
  require(value.size() == n_, ErrorCode::DimensionMismatch,
          "2-form component value size mismatch");
  if (i == j)
    require(value.cwiseAbs().maxCoeff() == 0.0, ErrorCode::InvalidArgument,
            "diagonal 2-form component must vanish");
  table_[i * m_ + j] = value;
  table_[j * m_ + i] = -value;
}

Vec TwoFormValue::contract(const Vec& u, const Vec& v) const {
  require(u.size() == m_ && v.size() == m_, ErrorCode::DimensionMismatch,
          "tangent vector size mismatch");
  Vec out = Vec::Zero(n_);
  for (int i = 0; i < m_; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < m_; ++j) {
      if (v[j] == 0.0) continue;
      out += u[i] * v[j] * at(i, j);
    }
  }
  return out;
}

TwoFormValue& TwoFormValue::operator+=(const TwoFormValue& other) {
  require(m_ == other.m_ && n_ == other.n_, ErrorCode::DimensionMismatch,
          "2-form value shape mismatch");
  for (std::size_t t = 0; t < table_.size(); ++t) table_[t] += other.table_[t];
  return *this;
}

TwoFormValue& TwoFormValue::operator-=(const TwoFormValue& other) {
  require(m_ == other.m_ && n_ == other.n_, ErrorCode::DimensionMismatch,
          "2-form value shape mismatch");
  for (std::size_t t = 0; t < table_.size(); ++t) table_[t] -= other.table_[t];
  return *this;
}

TwoFormValue& TwoFormValue::operator*=(double scale) {
  for (auto& v : table_) v *= scale;
  return *this;
}

double TwoFormValue::max_abs() const {
  double m = 0.0;
  for (const auto& v : table_)
    if (v.size() > 0) m = std::max(m, v.cwiseAbs().maxCoeff());
  return m;
}

ZeroForm::ZeroForm(Chart chart, LieAlgebraPtr algebra, ValueFn value,
                   DerivFn closed_form_derivative, FdPolicy fd)
    : chart_(std::move(chart)),
      algebra_(std::move(algebra)),
      value_(std::move(value)),
      dvalue_(std::move(closed_form_derivative)),
      fd_(fd) {
  require(static_cast<bool>(value_), ErrorCode::InvalidArgument,
          "0-form needs a value callback");
}

Vec ZeroForm::value(const Vec& x) const {
  chart_.require_inside(x);
  Vec v = value_(x);
  require(v.size() == algebra_->dim(), ErrorCode::DimensionMismatch,
          "0-form value has wrong algebra dimension");
  return v;
}

Vec ZeroForm::derivative(const Vec& x, int axis) const {
  if (dvalue_) {
    chart_.require_inside(x);
    return dvalue_(x, axis);
  }
  return derivative_fd(x, axis);
}

Vec ZeroForm::derivative_fd(const Vec& x, int axis) const {
  double h = fd_.step(chart_, axis);
  chart_.require_inside(x, 2.0 * h);
  return central_derivative<Vec>(
      [this](const Vec& p) { return value_(p); }, x, axis, h);
}

OneForm::OneForm(Chart chart, LieAlgebraPtr algebra, ValueFn value,
                 DerivFn closed_form_derivative, FdPolicy fd)
    : chart_(std::move(chart)),
      algebra_(std::move(algebra)),
      value_(std::move(value)),
      dvalue_(std::move(closed_form_derivative)),
      fd_(fd) {
  require(static_cast<bool>(value_), ErrorCode::InvalidArgument,
          "1-form needs a value callback");
}

Mat OneForm::value(const Vec& x) const {
  chart_.require_inside(x);
  Mat v = value_(x);
  require(v.rows() == chart_.dim() && v.cols() == algebra_->dim(),
          ErrorCode::DimensionMismatch, "1-form value has wrong shape");
  return v;
}

Mat OneForm::derivative(const Vec& x, int axis) const {
  if (dvalue_) {
    chart_.require_inside(x);
    return dvalue_(x, axis);
  }
  return derivative_fd(x, axis);
}

Mat OneForm::derivative_fd(const Vec& x, int axis) const {
  double h = fd_.step(chart_, axis);
  chart_.require_inside(x, 2.0 * h);
  return central_derivative<Mat>(
      [this](const Vec& p) { return value_(p); }, x, axis, h);
}

Vec OneForm::apply(const Vec& x, const Vec& v) const {
  require(v.size() == chart_.dim(), ErrorCode::DimensionMismatch,
          "tangent vector size mismatch");
  return value(x).transpose() * v;
}

OneForm OneForm::forced_finite_difference() const {
  return OneForm(chart_, algebra_, value_, nullptr, fd_);
}

OneForm OneForm::operator+(const OneForm& other) const {
  require(algebra_ == other.algebra_, ErrorCode::InvalidArgument,
          "1-form sum needs the same target algebra");
  ValueFn a = value_, b = other.value_;
  DerivFn d;
  if (dvalue_ && other.dvalue_) {
    DerivFn da = dvalue_, db = other.dvalue_;
    d = [da, db](const Vec& x, int k) -> Mat { return da(x, k) + db(x, k); };
  }
  return OneForm(chart_, algebra_,
                 [a, b](const Vec& x) -> Mat { return a(x) + b(x); }, d, fd_);
}

OneForm OneForm::operator-(const OneForm& other) const {
  return *this + other.scaled(-1.0);
}

OneForm OneForm::scaled(double factor) const {
  ValueFn a = value_;
  DerivFn d;
  if (dvalue_) {
    DerivFn da = dvalue_;
    d = [da, factor](const Vec& x, int k) -> Mat { return factor * da(x, k); };
  }
  return OneForm(chart_, algebra_,
                 [a, factor](const Vec& x) -> Mat { return factor * a(x); }, d,
                 fd_);
}

TwoForm::TwoForm(Chart chart, LieAlgebraPtr algebra, ValueFn value)
    : chart_(std::move(chart)),
      algebra_(std::move(algebra)),
      value_(std::move(value)) {
  require(static_cast<bool>(value_), ErrorCode::InvalidArgument,
          "2-form needs a value callback");
}

TwoFormValue TwoForm::value(const Vec& x) const {
  chart_.require_inside(x);
  TwoFormValue v = value_(x);
  require(v.chart_dim() == chart_.dim() && v.algebra_dim() == algebra_->dim(),
          ErrorCode::DimensionMismatch, "2-form value has wrong shape");
  return v;
}

TwoForm TwoForm::operator+(const TwoForm& other) const {
  require(algebra_ == other.algebra_, ErrorCode::InvalidArgument,
          "2-form sum needs the same target algebra");
  ValueFn a = value_, b = other.value_;
  return TwoForm(chart_, algebra_, [a, b](const Vec& x) {
    TwoFormValue v = a(x);
    v += b(x);
    return v;
  });
}

TwoForm TwoForm::operator-(const TwoForm& other) const {
  return *this + other.scaled(-1.0);
}

TwoForm TwoForm::scaled(double factor) const {
  ValueFn a = value_;
  return TwoForm(chart_, algebra_, [a, factor](const Vec& x) {
    TwoFormValue v = a(x);
    v *= factor;
    return v;
  });
}

OneForm exterior_derivative(const ZeroForm& f) {
  const int m = f.chart().dim();
  const int n = f.algebra()->dim();
  return OneForm(f.chart(), f.algebra(), [f, m, n](const Vec& x) -> Mat {
    Mat out(m, n);
    for (int i = 0; i < m; ++i) out.row(i) = f.derivative(x, i).transpose();
    return out;
  });
}

TwoForm exterior_derivative(const OneForm& lambda) {
  const int m = lambda.chart().dim();
  const int n = lambda.algebra()->dim();
  return TwoForm(lambda.chart(), lambda.algebra(),
                 [lambda, m, n](const Vec& x) {
                   std::vector<Mat> d(m);
                   for (int i = 0; i < m; ++i) d[i] = lambda.derivative(x, i);
                   TwoFormValue out(m, n);
                   for (int i = 0; i < m; ++i)
                     for (int j = i + 1; j < m; ++j)
                       out.set_pair(i, j,
                                    d[i].row(j).transpose() -
                                        d[j].row(i).transpose());
                   return out;
                 });
}

TwoForm wedge_bracket(const OneForm& lambda, const OneForm& mu) {
  require(lambda.algebra() == mu.algebra(), ErrorCode::InvalidArgument,
          "wedge_bracket needs the same target algebra");
  const int m = lambda.chart().dim();
  const int n = lambda.algebra()->dim();
  LieAlgebraPtr alg = lambda.algebra();
  return TwoForm(lambda.chart(), alg, [lambda, mu, alg, m, n](const Vec& x) {
    Mat lv = lambda.value(x);
    Mat mv = mu.value(x);
    TwoFormValue out(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        out.set_pair(i, j,
                     alg->bracket(lv.row(i), mv.row(j)) -
                         alg->bracket(lv.row(j), mv.row(i)));
    return out;
  });
}

double form_norm(const OneForm& omega, const Vec& x) {
  const LieAlgebra& alg = *omega.algebra();
  Mat v = omega.value(x);
  double sum = 0.0;
  for (int i = 0; i < v.rows(); ++i) sum += alg.inner(v.row(i), v.row(i));
  return std::sqrt(sum);
}

double form_norm(const TwoForm& omega, const Vec& x) {
  return form_norm(*omega.algebra(), omega.value(x));
}

double form_norm(const LieAlgebra& algebra, const TwoFormValue& value) {
  double sum = 0.0;
  for (int i = 0; i < value.chart_dim(); ++i)
    for (int j = i + 1; j < value.chart_dim(); ++j)
      sum += algebra.inner(value.at(i, j), value.at(i, j));
  return std::sqrt(sum);
}

namespace {

void write_csv_header(std::ostream& os, const Chart& chart,
                      const std::vector<std::string>& labels,
                      const std::vector<std::string>& components) {
  bool first = true;
  for (const auto& n : chart.names()) {
    os << (first ? "" : ",") << n;
    first = false;
  }
  for (const auto& c : components)
    for (const auto& l : labels) os << "," << c << ":" << l;
  os << "\n";
}

}  // namespace

void write_grid_csv(std::ostream& os, const OneForm& omega,
                    const std::vector<Vec>& points) {
  const Chart& chart = omega.chart();
  std::vector<std::string> comps;
  for (const auto& n : chart.names()) comps.push_back("d" + n);
  write_csv_header(os, chart, omega.algebra()->labels(), comps);
  for (const auto& x : points) {
    Mat v = omega.value(x);
    for (int i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    for (int i = 0; i < v.rows(); ++i)
      for (int a = 0; a < v.cols(); ++a) os << "," << v(i, a);
    os << "\n";
  }
}

void write_grid_csv(std::ostream& os, const TwoForm& omega,
                    const std::vector<Vec>& points) {
  const Chart& chart = omega.chart();
  const int m = chart.dim();
  std::vector<std::string> comps;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      comps.push_back("d" + chart.names()[i] + "^d" + chart.names()[j]);
  write_csv_header(os, chart, omega.algebra()->labels(), comps);
  for (const auto& x : points) {
    TwoFormValue v = omega.value(x);
    for (int i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int a = 0; a < v.algebra_dim(); ++a) os << "," << v.at(i, j)[a];
    os << "\n";
  }
}

}  // namespace zentner
