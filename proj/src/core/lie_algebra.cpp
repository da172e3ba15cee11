#include "core/lie_algebra.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zentner {

namespace {
constexpr double kAlgebraTol = 1e-12;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       const std::vector<StructureTriple>& constants,
                       std::optional<Mat> inner_product)
    : name_(std::move(name)),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      inner_(std::move(inner_product)) {
  require(dim_ > 0, ErrorCode::InvalidArgument,
          "Lie algebra needs a positive dimension");
  c_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
  for (const auto& t : constants) {
    require(t.i >= 0 && t.i < dim_ && t.j >= 0 && t.j < dim_ && t.k >= 0 &&
                t.k < dim_,
            ErrorCode::InvalidArgument,
            "structure constant index out of range in algebra " + name_);
    c_[idx(t.i, t.j, t.k)] += t.value;
  }
  validate();
}

void LieAlgebra::validate() const {
  double anti = antisymmetry_defect();
  require(anti <= kAlgebraTol, ErrorCode::InvalidArgument,
          "structure constants of " + name_ + " are not antisymmetric (defect " +
              std::to_string(anti) + ")");
  double jac = jacobi_defect();
  require(jac <= kAlgebraTol, ErrorCode::InvalidArgument,
          "structure constants of " + name_ + " violate the Jacobi identity (defect " +
              std::to_string(jac) + ")");
  if (inner_) {
    require(inner_->rows() == dim_ && inner_->cols() == dim_,
            ErrorCode::DimensionMismatch,
            "inner product matrix size mismatch in algebra " + name_);
    require((*inner_ - inner_->transpose()).cwiseAbs().maxCoeff() <= kAlgebraTol,
            ErrorCode::InvalidArgument,
            "inner product of " + name_ + " is not symmetric");
    Eigen::LLT<Mat> llt(*inner_);
    require(llt.info() == Eigen::Success, ErrorCode::InvalidArgument,
            "inner product of " + name_ + " is not positive definite");
    double adinv = ad_invariance_defect();
    require(adinv <= kAlgebraTol, ErrorCode::InvalidArgument,
            "inner product of " + name_ + " is not Ad-invariant (defect " +
                std::to_string(adinv) + ")");
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  require(x.size() == dim_ && y.size() == dim_, ErrorCode::DimensionMismatch,
          "bracket operands must have dimension " + std::to_string(dim_));
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      double xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += c(i, j, k) * xy;
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  require(x.size() == dim_, ErrorCode::DimensionMismatch,
          "ad operand must have dimension " + std::to_string(dim_));
  Mat out = Mat::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i)
      if (x[i] != 0.0)
        for (int k = 0; k < dim_; ++k) out(k, j) += x[i] * c(i, j, k);
  return out;
}

const Mat& LieAlgebra::inner_product() const {
  require(inner_.has_value(), ErrorCode::MissingInnerProduct,
          "algebra " + name_ + " carries no inner product");
  return *inner_;
}

double LieAlgebra::inner(const Vec& x, const Vec& y) const {
  const Mat& g = inner_product();
  require(x.size() == dim_ && y.size() == dim_, ErrorCode::DimensionMismatch,
          "inner product operands must have dimension " + std::to_string(dim_));
  return x.dot(g * y);
}

double LieAlgebra::norm(const Vec& x) const { return std::sqrt(inner(x, x)); }

double LieAlgebra::norm_or_euclidean(const Vec& x) const {
  return inner_ ? norm(x) : x.norm();
}

double LieAlgebra::antisymmetry_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        m = std::max(m, std::abs(c(i, j, k) + c(j, i, k)));
  return m;
}

double LieAlgebra::jacobi_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          double s = 0.0;
          for (int q = 0; q < dim_; ++q)
            s += c(i, j, q) * c(q, k, l) + c(j, k, q) * c(q, i, l) +
                 c(k, i, q) * c(q, j, l);
          m = std::max(m, std::abs(s));
        }
  return m;
}

double LieAlgebra::ad_invariance_defect() const {
  if (!inner_) return 0.0;
  const Mat& g = *inner_;
  double m = 0.0;
  // <[x,y],z> + <y,[x,z]> = 0 on basis triples
  for (int x = 0; x < dim_; ++x)
    for (int y = 0; y < dim_; ++y)
      for (int z = 0; z < dim_; ++z) {
        double s = 0.0;
        for (int q = 0; q < dim_; ++q)
          s += c(x, y, q) * g(q, z) + g(y, q) * c(x, z, q);
        m = std::max(m, std::abs(s));
      }
  return m;
}

LieAlgebra LieAlgebra::from_json(const nlohmann::json& doc) {
  try {
    require(doc.contains("dim") && doc.contains("labels") && doc.contains("c"),
            ErrorCode::JsonFormat,
            "algebra document needs \"dim\", \"labels\" and \"c\"");
    int dim = doc.at("dim").get<int>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    require(static_cast<int>(labels.size()) == dim, ErrorCode::JsonFormat,
            "label count does not match dim");
    std::vector<StructureTriple> constants;
    for (const auto& row : doc.at("c")) {
      require(row.is_array() && row.size() == 4, ErrorCode::JsonFormat,
              "each entry of \"c\" must be [i, j, k, value]");
      constants.push_back({row.at(0).get<int>(), row.at(1).get<int>(),
                           row.at(2).get<int>(), row.at(3).get<double>()});
    }
    std::optional<Mat> inner;
    if (doc.contains("inner_product") && !doc.at("inner_product").is_null()) {
      auto rows = doc.at("inner_product").get<std::vector<std::vector<double>>>();
      Mat g(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        require(static_cast<int>(rows[r].size()) == g.cols(),
                ErrorCode::JsonFormat, "ragged inner_product matrix");
        for (std::size_t s = 0; s < rows[r].size(); ++s) g(r, s) = rows[r][s];
      }
      inner = std::move(g);
    }
    std::string name = doc.value("name", std::string("algebra"));
    return LieAlgebra(name, labels, constants, std::move(inner));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::JsonFormat, std::string("bad algebra document: ") + e.what());
  }
}

nlohmann::json LieAlgebra::to_json() const {
  nlohmann::json doc;
  doc["name"] = name_;
  doc["dim"] = dim_;
  doc["labels"] = labels_;
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0.0)
          entries.push_back({i, j, k, c(i, j, k)});
  doc["c"] = entries;
  if (inner_) {
    std::vector<std::vector<double>> g(dim_, std::vector<double>(dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) g[i][j] = (*inner_)(i, j);
    doc["inner_product"] = g;
  } else {
    doc["inner_product"] = nullptr;
  }
  return doc;
}

namespace {

std::vector<StructureTriple> cross_product_constants() {
  // [e_i, e_j] = eps_ijk e_k
  return {{0, 1, 2, 1.0}, {1, 0, 2, -1.0}, {1, 2, 0, 1.0},
          {2, 1, 0, -1.0}, {2, 0, 1, 1.0}, {0, 2, 1, -1.0}};
}

}  // namespace

LieAlgebraPtr so3_algebra() {
  static const LieAlgebraPtr alg = std::make_shared<LieAlgebra>(
      "so(3)", std::vector<std::string>{"L1", "L2", "L3"},
      cross_product_constants(), Mat::Identity(3, 3));
  return alg;
}

LieAlgebraPtr su2_algebra() {
  static const LieAlgebraPtr alg = std::make_shared<LieAlgebra>(
      "su(2)", std::vector<std::string>{"e1", "e2", "e3"},
      cross_product_constants(), Mat::Identity(3, 3));
  return alg;
}

LieAlgebraPtr sl2r_algebra() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  static const LieAlgebraPtr alg = std::make_shared<LieAlgebra>(
      "sl(2,R)", std::vector<std::string>{"h", "e", "f"},
      std::vector<StructureTriple>{{0, 1, 1, 2.0},
                                   {1, 0, 1, -2.0},
                                   {0, 2, 2, -2.0},
                                   {2, 0, 2, 2.0},
                                   {1, 2, 0, 1.0},
                                   {2, 1, 0, -1.0}},
      std::nullopt);
  return alg;
}

LieAlgebraPtr abelian_algebra(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return std::make_shared<LieAlgebra>("abelian" + std::to_string(n), labels,
                                      std::vector<StructureTriple>{},
                                      Mat::Identity(n, n));
}

LieAlgebraPtr complexified_algebra(const LieAlgebraPtr& h) {
  int n = h->dim();
  std::vector<std::string> labels;
  for (const auto& l : h->labels()) labels.push_back(l);
  for (const auto& l : h->labels()) labels.push_back("i*" + l);
  std::vector<StructureTriple> constants;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = h->c(i, j, k);
        if (v == 0.0) continue;
        constants.push_back({i, j, k, v});              // [e, e] = [.,.]
        constants.push_back({i, j + n, k + n, v});      // [e, ie] = i[.,.]
        constants.push_back({i + n, j, k + n, v});      // [ie, e] = i[.,.]
        constants.push_back({i + n, j + n, k, -v});     // [ie, ie] = -[.,.]
      }
  return std::make_shared<LieAlgebra>(h->name() + " (x) C", labels, constants,
                                      std::nullopt);
}

}  // namespace zentner
