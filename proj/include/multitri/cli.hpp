#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multitri {

/// Dispatch a command line (without argv[0]). Returns the process exit
/// code: 0 success, 1 validation or verification failure, 2 usage error,
/// 3 informational rigidity report outside the proven dimensions.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace multitri
