#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnum::cli {

/// Exit codes: 0 success, 1 a verification or check failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnum::cli
