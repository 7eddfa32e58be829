#pragma once

#include <iosfwd>

namespace collective {

/// Entry point of the `collective` tool: subcommands dj, grover, basis,
/// qfunc, analyze. Returns 0 on success, 2 on usage errors, 1 on runtime
/// errors. Output that is not redirected with --out goes to `out`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace collective
