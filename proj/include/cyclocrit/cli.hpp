#pragma once

#include <iosfwd>

namespace cyclocrit::cli {

// Exit codes: 0 success, 1 criterion or fixture mismatch, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cyclocrit::cli
