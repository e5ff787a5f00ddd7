#include <csignal>
#include <iostream>

#include "tmine/cli.hpp"

int main(int argc, char** argv) {
  // A closed pipe shows up as a failed write instead of killing the process.
  std::signal(SIGPIPE, SIG_IGN);
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return tmine::run_cli(args, std::cout, std::cerr, std::cin);
}
