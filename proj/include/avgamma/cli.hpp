#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avgamma {

// Full command-line driver.  `args` excludes the program name.  Returns the
// process exit code: 0 on success, 1 when a verification suite fails, 2 on
// invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avgamma
