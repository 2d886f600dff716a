#ifndef KCUT_CLI_HPP
#define KCUT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kcut {

// Runs one CLI invocation. Writes exactly one report document to `out` on
// success and diagnostics to `err`. Returns the process exit code:
//   0 success, 2 input or usage error, 3 budget refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kcut

#endif
