#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoclose::cli {

/// Run one CLI invocation. Exit codes: 0 success/pass, 3 witness found (tc2),
/// 2 usage or cap errors, 1 a verify suite reported "violated". Everything is
/// deterministic: equal inputs give byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twoclose::cli
