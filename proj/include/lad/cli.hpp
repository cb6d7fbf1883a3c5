#ifndef LAD_CLI_HPP
#define LAD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lad {

// The ladtool driver. Exit codes: 0 success, 1 oracle inconsistency,
// 2 validation failure, 3 parse error, 4 capability refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lad

#endif
