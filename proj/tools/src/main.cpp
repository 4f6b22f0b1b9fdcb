#include <iostream>

#include "fov_cli/cli.hpp"

int main(int argc, char** argv) {
  return fov::cli::cli_dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
