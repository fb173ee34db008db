#ifndef PYRAMID_CLI_HPP
#define PYRAMID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pyramid::cli
{

enum ExitCode : int {
    ok = 0,
    usage = 1,
    parse_error = 2,
    precondition = 3,
    verification_failure = 4,
};

/// Runs one command. `args` excludes the program name; `in` is read when an input file is
/// omitted or given as "-".
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace pyramid::cli

#endif
