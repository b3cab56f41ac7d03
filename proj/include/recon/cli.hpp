#ifndef RECON_CLI_HPP
#define RECON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace recon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

/// Runs the command line `args` (args[0] is the program name). Returns 0 on
/// success or a verified claim, 2 when a counterexample was found, 1 on
/// usage or internal errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recon::cli

#endif  // RECON_CLI_HPP
