#pragma once

// Named verification suites over the module layer, a seeded specializer
// for exact randomized checks, and text / json report emission.  Checks
// inside a suite run on a worker pool capped by REFLEKT_THREADS.

#include <functional>
#include <string>
#include <vector>

#include "reflekt/transfer.hpp"

namespace reflekt {

struct CheckResult {
  std::string name;
  bool passed = false;
  int residual_nonzero = 0;   // nonzero entries of the residual, if any
  std::string scale;          // extracted proportionality factor, if any
  std::string detail;         // derived objects / failure explanation
  double wall_ms = 0.0;
};

struct SuiteConfig {
  std::string model = "a1-affine";  // a1-affine | a1
  std::string spin = "1/2";         // auxiliary spin: 1/2, 1, 3/2
  int sites = 2;
  unsigned seed = 1;
  std::vector<std::pair<std::string, std::string>> specialize;  // var=value
};

struct Report {
  std::string version;
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Registered suite names, in catalogue order.
std::vector<std::string> suite_catalogue();

// Run one named suite; throws ConfigError for unknown names or options.
Report run_suite(const std::string& suite, const SuiteConfig& cfg);

std::string report_text(const Report& r);
std::string report_json(const Report& r);  // stable schema, see cli docs

// Seeded draw of small nonzero rationals (num, den <= 97) for exact
// specialized checks; callers redraw on SpecializationPole.
class RationalDraw {
 public:
  explicit RationalDraw(unsigned seed);
  Scalar next();

 private:
  unsigned long long state_;
};

struct CheckSpec {
  std::string name;
  std::function<void(CheckResult&)> body;  // fills the outcome fields
};

// Worker-pool map: evaluates every check, at most REFLEKT_THREADS (or the
// hardware concurrency) at a time, preserving catalogue order; a thrown
// Error becomes a failed check with the code and message in detail.
std::vector<CheckResult> run_checks(const std::vector<CheckSpec>& specs);

}  // namespace reflekt
