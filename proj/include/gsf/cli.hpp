#pragma once

#include <iosfwd>

namespace gsf::cli {

/// Entry point of the `gsf` tool. Returns the process exit code:
/// 0 all checks pass, 1 a verification failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsf::cli
