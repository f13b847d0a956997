/*
  This is flagvar_cli.hpp: the command-line front end as a library.

  run_cli parses argv-style arguments, runs the requested analysis and
  writes a report to out.  Exposed as a function so the test suite can
  drive the tool in-process and check bytes and exit codes.

  Exit codes: 0 success, 2 invalid input, 3 inadmissible node,
  4 oracle mismatch, 1 internal error.
*/

#ifndef FLAGVAR_CLI_HPP
#define FLAGVAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace flagvar {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagvar

#endif
