#pragma once

#include <iosfwd>

namespace ks7::cli {

/// Runs the ks7 command line. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ks7::cli
