/* SPDX-License-Identifier: Apache-2.0 */

#include <iostream>
#include <string>
#include <vector>

#include "bpsolve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bpsolve::run(args, std::cout, std::cerr);
}
