#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hiero::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a computation error, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hiero::cli
