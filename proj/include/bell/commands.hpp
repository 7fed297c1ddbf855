#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bell {

// Runs the CLI on argv-style arguments (program name excluded) and returns
// the process exit code: 0 ok, 2 input parse error, 3 precondition violation,
// 4 reconstruction failure, 5 verification counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bell
