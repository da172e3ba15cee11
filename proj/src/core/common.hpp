#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zentner {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using complexd = std::complex<double>;

enum class ErrorCode {
  InvalidArgument = 1,
  UnknownScenario,
  DimensionMismatch,
  ChartBounds,
  Membership,
  SingularAlpha,
  MissingInnerProduct,
  Evaluation,
  JsonFormat,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Dense rank-3 array, zero initialized. Index order is caller convention.
class Tensor3 {
 public:
  Tensor3() : d0_(0), d1_(0), d2_(0) {}
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<std::size_t>(d0) * d1 * d2, 0.0) {}
  double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * d1_ + j) * d2_ + k;
  }
  int d0_, d1_, d2_;
  std::vector<double> v_;
};

class Tensor4 {
 public:
  Tensor4() : d0_(0), d1_(0), d2_(0), d3_(0) {}
  Tensor4(int d0, int d1, int d2, int d3)
      : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
        v_(static_cast<std::size_t>(d0) * d1 * d2 * d3, 0.0) {}
  double& operator()(int i, int j, int k, int l) { return v_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const {
    return v_[idx(i, j, k, l)];
  }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }
  double max_abs_diff(const Tensor4& other) const {
    double m = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i)
      m = std::max(m, std::abs(v_[i] - other.v_[i]));
    return m;
  }

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l;
  }
  int d0_, d1_, d2_, d3_;
  std::vector<double> v_;
};

// Runs body(i) for i in [0, n) on a small thread pool. Results must be
// written to disjoint slots; the first exception is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Portable uniform double in [0, 1) from raw 64-bit engine output, so seeded
// sweeps are reproducible across standard libraries.
template <typename Engine>
double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

template <typename Engine>
double uniform_in(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

}  // namespace zentner
