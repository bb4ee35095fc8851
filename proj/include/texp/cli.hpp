#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace texp::cli {

// Exit codes: 0 success, 2 invalid input, 3 non-convergence, 4 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace texp::cli
