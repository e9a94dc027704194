#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace ncdef {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand (args exclude the program name). The report goes to
/// `out` in one piece at the end; input errors are described on `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncdef
