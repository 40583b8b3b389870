#ifndef FGH_CLI_HPP
#define FGH_CLI_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace fgh {

// Outcome of one CLI invocation. The envelope always has the shape
// {"status": "ok"|"error", "payload": {...}, "diagnostics": [...]};
// exit codes: 0 ok, 1 domain error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  bool pretty = false;
  nlohmann::json envelope;
  std::string rendered() const;
};

CommandResult dispatch(const std::vector<std::string>& argv);

}  // namespace fgh

#endif
