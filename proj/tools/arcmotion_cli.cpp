/* command line front end: parse argv, run one experiment, map errors to exits */

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "arcmotion/cli.hpp"

int main(int argc, char **argv) {
  using namespace arcmotion;
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::fputs(usage_text().c_str(), stderr);
    return 2;
  }
  try {
    ExperimentSpec spec = parse_args(args);
    return run_command(spec);
  } catch (const Error &e) {
    std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code()), e.what());
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
