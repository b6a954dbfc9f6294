#ifndef EXSUPER_CLI_RUNNER_HPP
#define EXSUPER_CLI_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

namespace exsuper::cli {

struct Request {
  std::string subcommand;  // classify | chain | list | verify | chi | sweep
  std::string type;        // d | g3 | f4
  long long characteristic = 0;
  std::optional<std::string> zeta;  // integer literal or "generic"
  std::optional<std::vector<long long>> weight;
  std::optional<std::vector<long long>> box;
  std::string out = "-";  // path or "-" for stdout
};

struct Result {
  int exit_code;          // 0 ok, 1 verify mismatches, 2 invalid input
  std::string json;       // one JSON document ("" on invalid input)
  std::string error;      // diagnostic for exit code 2
};

/// Validate and dispatch a request. Never throws; invalid input comes back as
/// exit code 2.
Result run(const Request& req);

/// Parse argv, run, write output. Returns the process exit code.
int main_impl(int argc, char** argv);

}  // namespace exsuper::cli

#endif
