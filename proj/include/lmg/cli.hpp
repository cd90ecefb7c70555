#ifndef LMG_CLI_HPP
#define LMG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lmg {

/// Runs the `lmg` command line on `args` (without the program name).
/// Returns 0 when a boolean query holds or a command succeeds, 1 when a
/// boolean query fails, 2 on usage, input or limit errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmg

#endif
