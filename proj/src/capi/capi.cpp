#include "repdescent.h"

#include "repdescent/engine.hpp"
#include "repdescent/error.hpp"

#include <exception>
#include <new>
#include <string>

struct rd_report {
  repdescent::engine::Report report;
  std::string json;
  std::string summary;
};

namespace {

thread_local std::string last_error;

template <class F>
rd_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return RD_OK;
  } catch (const repdescent::Error& e) {
    last_error = e.what();
    return static_cast<rd_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RD_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* rd_version(void) { return repdescent::engine::kToolVersion; }

const char* rd_last_error(void) { return last_error.c_str(); }

rd_status rd_dispatch(const char* verb, const char* const* inputs, size_t n_inputs, const char* options_json,
                      rd_report** out) {
  return guarded([&] {
    namespace en = repdescent::engine;
    if (verb == nullptr || out == nullptr || (n_inputs > 0 && inputs == nullptr)) {
      throw repdescent::Error(repdescent::ErrorCode::invalid_argument, "null argument");
    }
    *out = nullptr;
    en::Command cmd;
    cmd.verb = verb;
    for (size_t k = 0; k < n_inputs; ++k) {
      if (inputs[k] == nullptr) throw repdescent::Error(repdescent::ErrorCode::invalid_argument, "null input path");
      cmd.inputs.emplace_back(inputs[k]);
    }
    if (options_json != nullptr) {
      en::json opts;
      try {
        opts = en::json::parse(options_json);
      } catch (const en::json::parse_error& e) {
        throw repdescent::Error(repdescent::ErrorCode::schema, std::string("options: malformed JSON: ") + e.what());
      }
      cmd.options = en::options_from_json(opts);
    }
    auto* r = new rd_report;
    try {
      r->report = en::dispatch(cmd);
      r->json = en::report_to_json(r->report).dump(2) + "\n";
      r->summary = en::render_summary(r->report);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

rd_status rd_validate_input(const char* path, const char* verb) {
  return guarded([&] {
    if (path == nullptr || verb == nullptr) {
      throw repdescent::Error(repdescent::ErrorCode::invalid_argument, "null argument");
    }
    (void)repdescent::engine::validate_input(path, verb);
  });
}

rd_check rd_report_status(const rd_report* report) {
  switch (report->report.status) {
    case repdescent::CheckStatus::pass: return RD_CHECK_PASS;
    case repdescent::CheckStatus::fail: return RD_CHECK_FAIL;
    case repdescent::CheckStatus::vacuous: return RD_CHECK_VACUOUS;
  }
  return RD_CHECK_FAIL;
}

int rd_report_exit_code(const rd_report* report) { return repdescent::engine::exit_code(report->report.status); }

const char* rd_report_json(const rd_report* report) { return report->json.c_str(); }

const char* rd_report_summary(const rd_report* report) { return report->summary.c_str(); }

rd_status rd_write_report(const rd_report* report, const char* path, int summary) {
  return guarded([&] {
    if (report == nullptr || path == nullptr) {
      throw repdescent::Error(repdescent::ErrorCode::invalid_argument, "null argument");
    }
    repdescent::engine::write_atomically(path, summary ? report->summary : report->json);
  });
}

void rd_report_free(rd_report* report) { delete report; }

}  // extern "C"
