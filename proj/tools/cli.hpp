#ifndef TSPERFECT_TOOLS_CLI_HPP
#define TSPERFECT_TOOLS_CLI_HPP

#include <iosfwd>

namespace tsperfect::cli {

/// Exit codes: 0 affirmative, 1 negative verdict (witness on `out`),
/// 2 usage or input-format error (diagnostic on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsperfect::cli

#endif
