#ifndef FGH_SUITES_HPP
#define FGH_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fgh {

// Bundled property suites, shared by the CLI and the acceptance runner.
struct SuiteResult {
  std::string name;
  bool pass = false;
  uint64_t samples = 0;
  uint64_t certified = 0;  // samples whose constituent verdicts were all certain
  uint64_t failures = 0;
  std::string detail;      // first counterexample or failure note
  double elapsed_s = 0.0;
};

struct SuiteOptions {
  uint64_t seed = 20260810;       // FGH_SEED overrides, --seed overrides that
  long samples = -1;              // -1: the suite's contractual sample count
  std::string lock_path = "encoding.lock";
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Throws std::invalid_argument on an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace fgh

#endif
