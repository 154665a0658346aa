#ifndef SEMIKIT_CLI_HPP_
#define SEMIKIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semikit::cli {

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_check_failed = 1;
  inline constexpr int exit_input_error  = 2;

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  int main(int argc, char const* const* argv);

}  // namespace semikit::cli

#endif  // SEMIKIT_CLI_HPP_
