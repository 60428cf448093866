#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsum::cli {

// Exit status: 0 all pass, 1 any fail or suspect (or evaluation failure),
// 2 usage error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsum::cli
