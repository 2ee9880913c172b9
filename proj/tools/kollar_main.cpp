#include "kollar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const kollar::cli::Result res = kollar::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}
