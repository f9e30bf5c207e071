#ifndef SFC_TOOLS_CLI_HPP
#define SFC_TOOLS_CLI_HPP

#include <iosfwd>

namespace sfc::cli {

/// Runs the sfc command line. Returns 0 on success, 1 when verification
/// fails and 2 on usage or range errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfc::cli

#endif
