#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coadwidth::cli {

// Exit codes: 0 success, 1 usage/parse error, 2 degenerate input (point
// orbit), 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coadwidth::cli
