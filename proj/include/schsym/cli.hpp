#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schsym {

// Full command-line driver. args excludes the program name. Returns the
// process exit code: 0 verified/success, 1 verification failure, 2 usage or
// parse errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schsym
