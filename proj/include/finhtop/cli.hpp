#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace finhtop {

/// Environment variable that overrides the default search budget.
inline constexpr const char* kBudgetEnv = "FINHTOP_BUDGET";

/**
 * Runs the command line `args` (without the program name), writing results
 * to `out` and diagnostics to `err`.  Returns 2 on usage, parse or
 * validation errors, 1 if any check is refuted, 0 otherwise.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finhtop
