#ifndef PROJGEOM_CLI_HPP
#define PROJGEOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace projgeom {

/// The whole command-line program: `args` excludes the program name.
/// Returns the process exit status (0 ok, 2 parse error, 3 precondition
/// violation, 4 internal inconsistency).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projgeom

#endif  // PROJGEOM_CLI_HPP
