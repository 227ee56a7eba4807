#ifndef ODC_CLI_HPP
#define ODC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace odc {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 when no telescoper exists at the requested point or verification fails,
/// 2 on usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace odc

#endif
