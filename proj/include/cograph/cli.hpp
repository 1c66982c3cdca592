#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cograph {

// args excludes the program name. Exit codes: 0 ok, 1 infeasible or
// violation, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cograph
