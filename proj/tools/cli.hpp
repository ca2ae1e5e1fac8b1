#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polariton {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 domain failure or failed check, 2 bad request / parse / I/O.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polariton
