#pragma once

#include <map>

#include "core/analysis.hpp"

namespace zentner {

// A reductive pair at the algebra level: ambient algebra with a subalgebra
// (index set h) and an Ad-invariant complement (index set m). Validates that
// h is a subalgebra and [h, m] is contained in m.
class ReductivePair {
 public:
  ReductivePair(LieAlgebraPtr ambient, std::vector<int> h_indices,
                std::vector<int> m_indices);

  const LieAlgebraPtr& ambient() const { return ambient_; }
  const std::vector<int>& h_indices() const { return h_idx_; }
  const std::vector<int>& m_indices() const { return m_idx_; }

  Vec project_h(const Vec& v) const;
  Vec project_m(const Vec& v) const;
  bool in_m_span(const Vec& v, double tol = 1e-12) const;

  // Torsion and curvature of the canonical invariant connection:
  //   T(X, Y) = -[X, Y]_m,   R(X, Y)(Z) = -[[X, Y]_h, Z]
  // for X, Y, Z in m. Inputs and outputs are ambient coordinates.
  std::pair<Vec, Vec> nomizu_tensors(const Vec& X, const Vec& Y,
                                     const Vec& Z) const;

 private:
  LieAlgebraPtr ambient_;
  std::vector<int> h_idx_, m_idx_;
};

// The pair (g, h + ih) of a real form: h spans the first n ambient indices,
// i h the last n.
ReductivePair real_form_pair(const RealFormDecomposition& rf);

// Options shared by the scenario constructors.
struct ScenarioOptions {
  bool closed_form_derivatives = true;
  double fd_base = 1e-4;
};

enum class CurvatureModel { Flat, Sphere, Halfspace };

// Frame-bundle triple of a constant-curvature 3-metric in the orthonormal
// trivialization: alpha(d_i) = e^phi L_i (the orthonormal coframe against the
// cross-product basis), A = the Levi-Civita connection form in that frame.
// The model fixes kappa: flat 0, sphere +1, halfspace -1; an inconsistent
// pair is an error.
LocalTriple constant_curvature_triple(double kappa, CurvatureModel model,
                                      const ScenarioOptions& opts = {});

// Slice triple of a real form H of G: sigma(x) = exp(sum x_j i e_j), the
// pulled-back Maurer-Cartan form split as omega = theta - i alpha, with
// A = theta. Chart radius stays within the exponential guard.
LocalTriple real_form_triple(const RealFormDecomposition& rf,
                             const ScenarioOptions& opts = {});

// Re-expresses an so(3) triple in the isometric su(2) basis through the
// inverse differential of the double cover; residuals are preserved.
LocalTriple su2_lift(const LocalTriple& t);

// The defining metric of a frame scenario (the geometry oracle input).
MetricChart scenario_metric(CurvatureModel model);

// Connection 1-form of a metric in a given orthonormal frame, computed from
// the Levi-Civita oracle: row k holds the so(3) coordinates of omega(d_k).
// frame rows are the frame vectors in chart coordinates.
Mat frame_connection_form(const MetricChart& mc,
                          const std::function<Mat(const Vec&)>& frame,
                          const Vec& x);

// ---- registry ----------------------------------------------------------

struct ScenarioInfo {
  std::string name;
  std::string description;
  bool expected_integrable = false;
  double kappa = std::numeric_limits<double>::quiet_NaN();
  std::vector<int> default_counts;
  Vec default_lo, default_hi;
  std::map<std::string, double> default_tolerances;
  std::vector<std::string> checks;  // applicable checks, canonical order
};

// All built-in scenarios, alphabetical by name.
const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo* find_scenario(const std::string& name);

// Instantiates a registered scenario. params (optional):
//   { "derivatives": "closed-form" | "finite-difference", "fd_base": number }
LocalTriple make_scenario(const std::string& name,
                          const nlohmann::json& params = {});

// Deterministic listing with parameter schemas (byte-identical across runs).
nlohmann::json scenario_listing_json();

}  // namespace zentner
