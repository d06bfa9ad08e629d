#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opsem {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point behind the `opsem` executable. `args` excludes the program
/// name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opsem
