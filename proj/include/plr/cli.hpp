#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plr {

/// Command-line front end; returns the process exit code.
/// 0 on success, 2 on agreement divergence, 1 on any other error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plr
