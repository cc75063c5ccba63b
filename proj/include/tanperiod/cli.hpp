#ifndef TANPERIOD_CLI_HPP
#define TANPERIOD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tanperiod::cli
{

// sysexits-style codes plus the two domain outcomes.
enum ExitCode : int {
    ok = 0,
    rejected = 2,
    not_center = 3,
    usage = 64,
    data_error = 65,
    no_input = 66,
    internal = 70,
    cant_create = 73,
};

/// Runs one subcommand (classify, halfreturn, period, simulate, compare). `args` excludes the
/// program name. The report goes to `out` (or --out FILE); diagnostics and warnings go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tanperiod::cli

#endif
