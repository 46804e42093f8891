#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flg {

/// Runs the command-line front end. Machine-readable JSON goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 negative finding
/// (not stable / no equilibrium found), 2 input error, 3 solver failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flg
