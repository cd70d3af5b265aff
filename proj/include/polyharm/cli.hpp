#pragma once

#include <ostream>
#include <string>
#include <vector>

/// Command-line front end. `args` excludes the program name.
namespace polyharm::cli {

enum ExitCode : int {
    kOk = 0,
    kCertificateFailure = 1,
    kParseError = 2,
    kInternalSingularity = 3,
};

/// Runs one subcommand and returns its exit code. Results go to `out` or to
/// the files named by flags; diagnostics and logs go to `err`. Log verbosity
/// comes from POLYHARM_LOG (error, info, debug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyharm::cli
