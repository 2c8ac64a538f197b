#include "reflekt.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "reflekt/suite.hpp"

using reflekt::Error;
using reflekt::ErrorCode;

struct reflekt_job {
  std::string suite = "kmatrix";
  std::string format = "text";
  reflekt::SuiteConfig cfg;
  std::optional<reflekt::Report> report;
  std::string last_error;
};

namespace {

int fail(reflekt_job* job, ErrorCode code, const std::string& msg) {
  job->last_error = msg;
  return static_cast<int>(code);
}

std::vector<std::pair<std::string, std::string>> parse_specialize(
    const std::string& value) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < value.size()) {
    std::size_t comma = value.find(',', pos);
    if (comma == std::string::npos) comma = value.size();
    std::string item = value.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::ConfigError,
                  "specialize items must be var=value: " + item);
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* reflekt_version(void) { return "0.1.0"; }

const char* reflekt_suites(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& name : reflekt::suite_catalogue()) {
      if (!s.empty()) s += "\n";
      s += name;
    }
    return s;
  }();
  return joined.c_str();
}

reflekt_job* reflekt_job_new(void) { return new (std::nothrow) reflekt_job; }

void reflekt_job_free(reflekt_job* job) { delete job; }

int reflekt_job_set(reflekt_job* job, const char* key, const char* value) {
  if (!job) return static_cast<int>(ErrorCode::ConfigError);
  if (!key || !value)
    return fail(job, ErrorCode::ConfigError, "null key or value");
  try {
    std::string k = key, v = value;
    if (k == "suite") {
      auto names = reflekt::suite_catalogue();
      if (std::find(names.begin(), names.end(), v) == names.end())
        throw Error(ErrorCode::ConfigError, "unknown suite: " + v);
      job->suite = v;
    } else if (k == "model") {
      if (v != "a1-affine" && v != "a1")
        throw Error(ErrorCode::ConfigError, "unknown model: " + v);
      job->cfg.model = v;
    } else if (k == "spin") {
      if (v != "1/2" && v != "1" && v != "3/2")
        throw Error(ErrorCode::ConfigError, "unsupported spin: " + v);
      job->cfg.spin = v;
    } else if (k == "sites") {
      std::size_t used = 0;
      int sites = std::stoi(v, &used);
      if (used != v.size() || sites < 0)
        throw Error(ErrorCode::ConfigError, "bad sites: " + v);
      job->cfg.sites = sites;
    } else if (k == "seed") {
      std::size_t used = 0;
      unsigned long seed = std::stoul(v, &used);
      if (used != v.size())
        throw Error(ErrorCode::ConfigError, "bad seed: " + v);
      job->cfg.seed = static_cast<unsigned>(seed);
    } else if (k == "format") {
      if (v != "text" && v != "json")
        throw Error(ErrorCode::ConfigError, "unknown format: " + v);
      job->format = v;
    } else if (k == "specialize") {
      job->cfg.specialize = parse_specialize(v);
    } else {
      throw Error(ErrorCode::ConfigError, "unknown option: " + k);
    }
  } catch (const Error& e) {
    return fail(job, e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(job, ErrorCode::ConfigError, e.what());
  }
  job->last_error.clear();
  return 0;
}

int reflekt_job_run(reflekt_job* job) {
  if (!job) return static_cast<int>(ErrorCode::ConfigError);
  try {
    job->report = reflekt::run_suite(job->suite, job->cfg);
  } catch (const Error& e) {
    job->report.reset();
    return fail(job, e.code(), e.what());
  } catch (const std::exception& e) {
    job->report.reset();
    return fail(job, ErrorCode::Internal, e.what());
  }
  job->last_error.clear();
  return 0;
}

int reflekt_job_passed(const reflekt_job* job) {
  return job && job->report && job->report->all_passed() ? 1 : 0;
}

char* reflekt_job_report(const reflekt_job* job) {
  if (!job || !job->report) return nullptr;
  const std::string text = job->format == "json"
                               ? reflekt::report_json(*job->report)
                               : reflekt::report_text(*job->report);
  return dup_string(text);
}

const char* reflekt_job_last_error(const reflekt_job* job) {
  return job ? job->last_error.c_str() : "";
}

void reflekt_string_free(char* text) { std::free(text); }

}  // extern "C"
