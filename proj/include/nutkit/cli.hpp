#pragma once

#include <iosfwd>

namespace nutkit::cli {

/// Entry point of the command line tool. Returns the process exit code:
/// 0 on success, 1 on verification failure or malformed input, 2 on usage
/// errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace nutkit::cli
