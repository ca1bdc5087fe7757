#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colorlie {

/// Full command dispatcher; returns the process exit code:
/// 0 all checks passed, 1 some check failed, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace colorlie
