#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvstop {

/// Runs one subcommand. `args` excludes the program name. The report (or
/// DOT text) goes to `out`, diagnostics to `err`.
///
/// Exit status: 0 when every checked clause passes (a budget-limited
/// partial result also counts), 1 when a clause fails, 2 on malformed
/// input, refused hypotheses or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvstop
