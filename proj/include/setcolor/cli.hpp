#pragma once

#include <iosfwd>

namespace setcolor {

/// Command-line entry point. Exit status: 0 success / valid / pass, 1 failed verdict,
/// 2 bad input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setcolor
