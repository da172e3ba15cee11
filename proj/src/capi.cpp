#include "zentner.h"

#include <cstring>
#include <string>

#include "core/runner.hpp"

using zentner::Error;
using zentner::ErrorCode;

struct zt_triple {
  zentner::LocalTriple triple;
};

struct zt_report {
  zentner::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

zt_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return ZT_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnknownScenario:
      return ZT_ERR_UNKNOWN_SCENARIO;
    case ErrorCode::DimensionMismatch:
      return ZT_ERR_DIMENSION;
    case ErrorCode::ChartBounds:
      return ZT_ERR_BOUNDS;
    case ErrorCode::Membership:
      return ZT_ERR_MEMBERSHIP;
    case ErrorCode::SingularAlpha:
      return ZT_ERR_SINGULAR;
    case ErrorCode::MissingInnerProduct:
      return ZT_ERR_MISSING_INNER_PRODUCT;
    case ErrorCode::Evaluation:
      return ZT_ERR_EVALUATION;
    case ErrorCode::JsonFormat:
      return ZT_ERR_JSON;
    case ErrorCode::Internal:
      return ZT_ERR_INTERNAL;
  }
  return ZT_ERR_INTERNAL;
}

template <typename Fn>
zt_status guarded(Fn&& fn) {
  try {
    fn();
    return ZT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ZT_ERR_JSON;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ZT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_or_empty(const char* doc) {
  if (doc == nullptr || *doc == '\0') return nlohmann::json::object();
  nlohmann::json parsed = nlohmann::json::parse(doc, nullptr, false);
  if (parsed.is_discarded())
    zentner::fail(ErrorCode::JsonFormat, "malformed JSON document");
  return parsed;
}

}  // namespace

extern "C" {

const char* zt_version(void) { return "0.1.0"; }

const char* zt_last_error(void) { return g_last_error.c_str(); }

void zt_string_free(char* s) { delete[] s; }

zt_status zt_scenario_list(char** out_json) {
  return guarded([&] {
    zentner::require(out_json != nullptr, ErrorCode::InvalidArgument,
                     "out_json must not be null");
    *out_json = dup_string(zentner::scenario_listing_json().dump(2));
  });
}

zt_status zt_triple_create(const char* scenario, const char* params_json,
                           zt_triple** out) {
  return guarded([&] {
    zentner::require(scenario != nullptr && out != nullptr,
                     ErrorCode::InvalidArgument,
                     "scenario and out must not be null");
    nlohmann::json params = parse_or_empty(params_json);
    *out = new zt_triple{zentner::make_scenario(scenario, params)};
  });
}

void zt_triple_destroy(zt_triple* triple) { delete triple; }

zt_status zt_triple_info(const zt_triple* triple, char** out_json) {
  return guarded([&] {
    zentner::require(triple != nullptr && out_json != nullptr,
                     ErrorCode::InvalidArgument, "null argument");
    *out_json = dup_string(triple->triple.to_json().dump(2));
  });
}

zt_status zt_triple_admissibility(const zt_triple* triple, const double* point,
                                  int point_len, double* out_det,
                                  int* out_admissible) {
  return guarded([&] {
    zentner::require(triple != nullptr && point != nullptr &&
                         out_det != nullptr && out_admissible != nullptr,
                     ErrorCode::InvalidArgument, "null argument");
    zentner::Vec x = Eigen::Map<const zentner::Vec>(point, point_len);
    zentner::AdmissibilityResult res =
        zentner::admissibility(triple->triple.alpha, x);
    zentner::require(res.square, ErrorCode::DimensionMismatch,
                     "alpha is not square (dim chart != dim algebra); the "
                     "triple cannot be admissible");
    *out_det = res.det;
    *out_admissible = res.admissible ? 1 : 0;
  });
}

zt_status zt_run(const zt_triple* triple, const char* config_json,
                 zt_report** out) {
  return guarded([&] {
    zentner::require(triple != nullptr && out != nullptr,
                     ErrorCode::InvalidArgument, "null argument");
    zentner::RunConfig cfg =
        zentner::RunConfig::from_json(parse_or_empty(config_json));
    if (cfg.scenario.empty()) cfg.scenario = triple->triple.scenario;
    *out = new zt_report{zentner::run_checks(triple->triple, cfg)};
  });
}

int zt_report_passed(const zt_report* report) {
  return (report != nullptr && report->report.all_pass) ? 1 : 0;
}

zt_status zt_report_json(const zt_report* report, char** out_json) {
  return guarded([&] {
    zentner::require(report != nullptr && out_json != nullptr,
                     ErrorCode::InvalidArgument, "null argument");
    *out_json = dup_string(report->report.to_json().dump(2));
  });
}

zt_status zt_report_text(const zt_report* report, char** out_text) {
  return guarded([&] {
    zentner::require(report != nullptr && out_text != nullptr,
                     ErrorCode::InvalidArgument, "null argument");
    *out_text = dup_string(report->report.to_text());
  });
}

void zt_report_destroy(zt_report* report) { delete report; }

}  // extern "C"
