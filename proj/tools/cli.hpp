#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gromov::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCheckFailed = 2,
  kPrecondition = 3,
};

/// Runs the command line `args` (program name first). Input path "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gromov::cli
