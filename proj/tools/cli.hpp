#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffg::cli {

// Exit codes: 0 when every requested verification passes, 1 on a failed or
// inconclusive verification, 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffg::cli
