#include "semikit/cli.hpp"

int main(int argc, char** argv) {
  return semikit::cli::main(argc, argv);
}
