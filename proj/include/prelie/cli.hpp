#ifndef PRELIE_CLI_HPP
#define PRELIE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace prelie {

/// Command-line driver.  Exit codes: 0 success, 1 parse error, 2 arity or
/// ring error, 3 non-integral division (internal bug signal), 4 failed
/// verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prelie

#endif
