#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlp::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,
  kNumeric = 2,
  kOracleMismatch = 3,
};

/// Runs one `vlp` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.15g"), the float format of every CSV the tool writes.
std::string format_real(double v);

}  // namespace vlp::cli
