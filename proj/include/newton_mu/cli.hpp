#pragma once

#include <iosfwd>

namespace newton_mu::cli {

/// Runs one command line. Reports (and error objects) go to `out`; the return
/// value is the process exit code: 0 success, 1 usage error, 2 domain error.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace newton_mu::cli
