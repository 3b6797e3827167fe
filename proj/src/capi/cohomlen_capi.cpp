#include "cohomlen/cohomlen.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/oracle.hpp"
#include "core/query.hpp"

struct cohomlen_report {
  cohomlen::Report report;
  std::string rendered;
  std::string error_code;
};

struct cohomlen_rep_sphere {
  cohomlen::RepSphere sphere;
  std::string euler_text;
};

namespace {

thread_local std::string last_error;

cohomlen_status to_status(cohomlen::ExitStatus s) { return static_cast<cohomlen_status>(s); }

cohomlen_status set_error(cohomlen_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes and last_error.
template <typename F>
cohomlen_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const cohomlen::Error& e) {
    return set_error(to_status(cohomlen::exit_status_for(e.kind())),
                     std::string(e.code()) + ": " + e.what());
  } catch (const std::exception& e) {
    return set_error(COHOMLEN_E_DATA, std::string("E_INTERNAL: ") + e.what());
  } catch (...) {
    return set_error(COHOMLEN_E_DATA, "E_INTERNAL: unknown failure");
  }
}

cohomlen_status wrap_report(cohomlen::Report report, cohomlen_report** out) {
  auto* handle = new cohomlen_report{std::move(report), {}, {}};
  const auto& body = handle->report.body;
  if (body.contains("error")) {
    handle->error_code = body.at("error").at("code").get<std::string>();
    last_error = handle->error_code + ": " + body.at("error").at("message").get<std::string>();
  }
  *out = handle;
  return to_status(handle->report.status);
}

}  // namespace

extern "C" {

const char* cohomlen_version(void) { return "1.0.0"; }

const char* cohomlen_last_error(void) { return last_error.c_str(); }

cohomlen_status cohomlen_run(const char* document_json, const char* query, const char* const* param_keys,
                             const char* const* param_values, size_t nparams, cohomlen_report** out) {
  return guarded([&] {
    if (!document_json || !out) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    if (nparams > 0 && (!param_keys || !param_values)) {
      return set_error(COHOMLEN_E_USAGE, "E_USAGE: null parameter arrays");
    }
    std::vector<std::pair<std::string, std::string>> params;
    for (size_t i = 0; i < nparams; ++i) {
      if (!param_keys[i] || !param_values[i]) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null parameter");
      params.emplace_back(param_keys[i], param_values[i]);
    }
    const std::optional<std::string> q = query ? std::optional<std::string>(query) : std::nullopt;
    return wrap_report(cohomlen::run(document_json, q, params), out);
  });
}

cohomlen_status cohomlen_lint(const char* document_json, cohomlen_report** out) {
  return guarded([&] {
    if (!document_json || !out) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    return wrap_report(cohomlen::lint(document_json), out);
  });
}

cohomlen_status cohomlen_report_status(const cohomlen_report* report) {
  if (!report) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null report");
  return to_status(report->report.status);
}

const char* cohomlen_report_render(cohomlen_report* report, cohomlen_format format) {
  if (!report) return "";
  try {
    report->rendered = cohomlen::render(report->report, format == COHOMLEN_FORMAT_TEXT
                                                             ? cohomlen::OutputFormat::text
                                                             : cohomlen::OutputFormat::json);
  } catch (const std::exception& e) {
    set_error(COHOMLEN_E_DATA, std::string("E_INTERNAL: ") + e.what());
    report->rendered.clear();
  }
  return report->rendered.c_str();
}

const char* cohomlen_report_error_code(const cohomlen_report* report) {
  return report ? report->error_code.c_str() : "";
}

void cohomlen_report_free(cohomlen_report* report) { delete report; }

cohomlen_status cohomlen_rep_sphere_create(int64_t p, size_t rank, const int64_t* weights, size_t nweights,
                                           cohomlen_rep_sphere** out) {
  return guarded([&] {
    if (!out || (nweights > 0 && !weights)) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    const cohomlen::GroupSpec group(p, rank);
    std::vector<cohomlen::Weight> ws;
    ws.reserve(nweights);
    for (size_t i = 0; i < nweights; ++i) {
      ws.emplace_back(group, std::vector<std::int64_t>(weights + i * rank, weights + (i + 1) * rank));
    }
    *out = new cohomlen_rep_sphere{cohomlen::RepSphere(group, std::move(ws)), {}};
    return COHOMLEN_OK;
  });
}

void cohomlen_rep_sphere_free(cohomlen_rep_sphere* sphere) { delete sphere; }

cohomlen_status cohomlen_rep_sphere_dim(const cohomlen_rep_sphere* sphere, int64_t* out) {
  return guarded([&] {
    if (!sphere || !out) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    *out = cohomlen::sphere_dim(sphere->sphere);
    return COHOMLEN_OK;
  });
}

cohomlen_status cohomlen_rep_sphere_length(const cohomlen_rep_sphere* sphere, int64_t* out) {
  return guarded([&] {
    if (!sphere || !out) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    *out = cohomlen::length_rep_sphere(sphere->sphere).lo;
    return COHOMLEN_OK;
  });
}

cohomlen_status cohomlen_rep_sphere_euler(cohomlen_rep_sphere* sphere, const char** out) {
  return guarded([&] {
    if (!sphere || !out) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    sphere->euler_text = cohomlen::euler_class(cohomlen::to_cohom_data(sphere->sphere)).polynomial.to_string();
    *out = sphere->euler_text.c_str();
    return COHOMLEN_OK;
  });
}

cohomlen_status cohomlen_rep_sphere_verify(const cohomlen_rep_sphere* sphere, int64_t lambda_max,
                                           int64_t* lambda, int* agrees) {
  return guarded([&] {
    if (!sphere || !lambda || !agrees) return set_error(COHOMLEN_E_USAGE, "E_USAGE: null argument");
    const auto report = cohomlen::cross_check(sphere->sphere, lambda_max);
    *lambda = report.lambda;
    *agrees = report.agrees ? 1 : 0;
    return COHOMLEN_OK;
  });
}

}  // extern "C"
