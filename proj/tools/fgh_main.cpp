#include <iostream>
#include <vector>

#include "fgh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  fgh::CommandResult res = fgh::dispatch(args);
  std::cout << res.rendered();
  return res.exit_code;
}
