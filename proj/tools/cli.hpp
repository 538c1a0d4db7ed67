#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coalrank::cli {

// Exit codes: 0 success or expected verdict, 1 unexpected verdict,
// 2 usage/parse error, 3 resource cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coalrank::cli
